#pragma once

#include <cstddef>
#include <vector>

#include "eccspec/graph.hpp"

namespace eccspec {

// A host graph H on k >= 2 vertices together with one factor graph per host
// vertex. Factor i occupies the index range [offset(i), offset(i) + n_i) of
// the joined graph.
class JoinScheme {
 public:
  // Throws std::invalid_argument if k < 2 or the factor count differs from k,
  // DisconnectedGraphError if the host is disconnected.
  JoinScheme(Graph host, std::vector<Graph> factors);

  const Graph& host() const { return host_; }
  const std::vector<Graph>& factors() const { return factors_; }
  const Graph& factor(std::size_t i) const { return factors_[i]; }
  std::size_t k() const { return factors_.size(); }

  std::size_t factor_size(std::size_t i) const { return factors_[i].order(); }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  std::size_t total_order() const { return offsets_.back(); }
  std::vector<std::size_t> sizes() const;

 private:
  Graph host_;
  std::vector<Graph> factors_;
  std::vector<std::size_t> offsets_;  // k + 1 prefix sums
};

// H[G_1, ..., G_k]: factor blocks in index order, complete bipartite
// connections between blocks i and j whenever ij is a host edge.
Graph h_join(const JoinScheme& scheme);

// H[G]: every factor equal to g.
Graph lexicographic(const Graph& h, const Graph& g);

// G_1 v G_2, i.e. K_2[G_1, G_2]. g1's vertices come first.
Graph join(const Graph& g1, const Graph& g2);

// Disjoint union, g1 first.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Generalized corona: h's vertices first, then the factors in order; host
// vertex i is adjacent to every vertex of factors[i].
Graph generalized_corona(const Graph& h, const std::vector<Graph>& factors);

// Identifies v1 in g1 with v2 in g2. Vertex order: g1 unchanged, then the
// vertices of g2 other than v2 in increasing order.
Graph coalescence(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

}  // namespace eccspec
