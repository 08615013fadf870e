#include "eccspec/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace eccspec {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0), degree_(n, 0) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references a vertex >= n = " + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    add_edge_unchecked(u, v);
  }
}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
  if (adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  for (Vertex w = 0; w < n_; ++w)
    if (adj_[v * n_ + w]) out.push_back(w);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adj_[u * n_ + v]) out.emplace_back(u, v);
  return out;
}

IntMatrix Graph::adjacency_matrix() const {
  IntMatrix a = IntMatrix::square(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v) a(u, v) = adj_[u * n_ + v];
  return a;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  if (vertices.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) out.add_edge_unchecked(i, j);
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::optional<std::size_t> is_regular(const Graph& g) {
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::int64_t> dist(g.order(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w = 0; w < g.order(); ++w) {
      if (g.adjacent(u, w) && dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::int64_t x) { return x == kUnreachable; });
}

MetricProfile metric_profile(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbours(v);

  MetricProfile p;
  p.dist = IntMatrix::square(n);
  p.ecc.assign(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::size_t head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : nbrs[u]) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) throw DisconnectedGraphError();
    for (Vertex v = 0; v < n; ++v) p.dist(s, v) = dist[v];
    p.ecc[s] = *std::max_element(dist.begin(), dist.end());
  }
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  return p;
}

}  // namespace eccspec
