#include "eccspec/operators.hpp"

#include <stdexcept>
#include <string>

namespace eccspec {

JoinScheme::JoinScheme(Graph host, std::vector<Graph> factors)
    : host_(std::move(host)), factors_(std::move(factors)) {
  if (host_.order() < 2) throw std::invalid_argument("join scheme: host needs k >= 2 vertices");
  if (factors_.size() != host_.order())
    throw std::invalid_argument("join scheme: host has " + std::to_string(host_.order()) +
                                " vertices but " + std::to_string(factors_.size()) +
                                " factors were given");
  if (!is_connected(host_)) throw DisconnectedGraphError();
  offsets_.assign(factors_.size() + 1, 0);
  for (std::size_t i = 0; i < factors_.size(); ++i)
    offsets_[i + 1] = offsets_[i] + factors_[i].order();
}

std::vector<std::size_t> JoinScheme::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(k());
  for (const auto& f : factors_) out.push_back(f.order());
  return out;
}

Graph h_join(const JoinScheme& scheme) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < scheme.k(); ++i) {
    const std::size_t base = scheme.offset(i);
    for (const auto& [u, v] : scheme.factor(i).edges()) edges.emplace_back(base + u, base + v);
  }
  for (const auto& [i, j] : scheme.host().edges()) {
    for (std::size_t x = 0; x < scheme.factor_size(i); ++x)
      for (std::size_t y = 0; y < scheme.factor_size(j); ++y)
        edges.emplace_back(scheme.offset(i) + x, scheme.offset(j) + y);
  }
  return Graph(scheme.total_order(), edges);
}

Graph lexicographic(const Graph& h, const Graph& g) {
  return h_join(JoinScheme(h, std::vector<Graph>(h.order(), g)));
}

Graph join(const Graph& g1, const Graph& g2) {
  return h_join(JoinScheme(Graph(2, std::vector<Edge>{{0, 1}}), {g1, g2}));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(g1.order() + u, g1.order() + v);
  return Graph(g1.order() + g2.order(), edges);
}

Graph generalized_corona(const Graph& h, const std::vector<Graph>& factors) {
  if (factors.size() != h.order())
    throw std::invalid_argument("generalized corona: host has " + std::to_string(h.order()) +
                                " vertices but " + std::to_string(factors.size()) +
                                " factors were given");
  std::vector<Edge> edges = h.edges();
  std::size_t base = h.order();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& [u, v] : factors[i].edges()) edges.emplace_back(base + u, base + v);
    for (std::size_t x = 0; x < factors[i].order(); ++x) edges.emplace_back(i, base + x);
    base += factors[i].order();
  }
  return Graph(base, edges);
}

Graph coalescence(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (v1 >= g1.order() || v2 >= g2.order())
    throw std::invalid_argument("coalescence: distinguished vertex out of range");
  // Map g2's vertices into the combined index space.
  std::vector<Vertex> map2(g2.order());
  Vertex next = g1.order();
  for (Vertex w = 0; w < g2.order(); ++w) map2[w] = (w == v2) ? v1 : next++;
  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(map2[u], map2[v]);
  return Graph(g1.order() + g2.order() - 1, edges);
}

}  // namespace eccspec
