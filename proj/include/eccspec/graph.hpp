#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eccspec/int_matrix.hpp"

namespace eccspec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Thrown when a metric quantity is requested on a disconnected graph.
class DisconnectedGraphError : public std::domain_error {
 public:
  DisconnectedGraphError()
      : std::domain_error("metric undefined: graph is disconnected") {}
};

// Simple undirected graph on vertices 0..n-1 with dense adjacency storage.
class Graph {
 public:
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  std::size_t degree(Vertex v) const { return degree_[v]; }

  // Neighbours of v in increasing order.
  std::vector<Vertex> neighbours(Vertex v) const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Adjacency matrix A(G) as integers.
  IntMatrix adjacency_matrix() const;

  // Subgraph induced by `vertices`, relabelled 0..|vertices|-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  bool operator==(const Graph& other) const = default;

 private:
  void add_edge_unchecked(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::size_t> degree_;
};

// Validating construction; rejects self-loops and out-of-range vertices.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

Graph complement(const Graph& g);

std::optional<std::size_t> is_regular(const Graph& g);
std::size_t max_degree(const Graph& g);
bool is_complete(const Graph& g);
bool is_connected(const Graph& g);

// Hop distances from a single source; unreachable vertices get `kUnreachable`.
inline constexpr std::int64_t kUnreachable = -1;
std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source);

struct MetricProfile {
  IntMatrix dist;
  std::vector<std::int64_t> ecc;
  std::int64_t radius = 0;
  std::int64_t diameter = 0;
};

// All-pairs BFS. Throws DisconnectedGraphError if g is not connected.
MetricProfile metric_profile(const Graph& g);

}  // namespace eccspec
