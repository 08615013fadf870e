#include "eccspec/families.hpp"

#include <stdexcept>

namespace eccspec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void add_clique(std::vector<Edge>& edges, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
}

std::vector<Vertex> range(Vertex first, std::size_t count) {
  std::vector<Vertex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

}  // namespace

Graph path(std::size_t n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> edges;
  add_clique(edges, range(0, n));
  return Graph(n, edges);
}

Graph empty(std::size_t n) {
  require(n >= 1, "empty: n must be >= 1");
  return Graph(n);
}

Graph star(std::size_t m) {
  require(m >= 1, "star: m must be >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= m; ++i) edges.emplace_back(0, i);
  return Graph(m + 1, edges);
}

Graph multipartite(std::span<const std::size_t> part_sizes) {
  require(!part_sizes.empty(), "multipartite: need at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "multipartite: part sizes must be >= 1");
    part_of.insert(part_of.end(), part_sizes[p], p);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph(part_of.size(), edges);
}

Graph double_star(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "double_star: a, b must be >= 1");
  const Vertex c1 = a, c2 = a + 1;
  std::vector<Edge> edges{{c1, c2}};
  for (Vertex i = 0; i < a; ++i) edges.emplace_back(i, c1);
  for (Vertex i = 0; i < b; ++i) edges.emplace_back(c2, a + 2 + i);
  return Graph(a + b + 2, edges);
}

Graph barbell(std::size_t n) {
  require(n >= 2, "barbell: n must be >= 2");
  std::vector<Edge> edges;
  add_clique(edges, range(0, n));  // bridge end n-1
  add_clique(edges, range(n, n));  // bridge end n
  edges.emplace_back(n - 1, n);
  return Graph(2 * n, edges);
}

Graph windmill(std::size_t n, std::size_t t) {
  require(n >= 1, "windmill: n must be >= 1");
  require(t >= 2, "windmill: t must be >= 2");
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < t; ++b) {
    auto block = range(1 + b * n, n);
    block.insert(block.begin(), 0);
    add_clique(edges, block);
  }
  return Graph(1 + n * t, edges);
}

Graph wheel(std::size_t n) {
  require(n >= 3, "wheel: rim size n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    edges.emplace_back(0, 1 + i);
    edges.emplace_back(1 + i, 1 + (i + 1) % n);
  }
  return Graph(n + 1, edges);
}

Graph s_n3(std::size_t n) {
  require(n >= 5, "s_n3: n must be >= 5");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex i = 3; i < n; ++i) edges.emplace_back(2, i);
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

std::vector<std::string> family_names() {
  return {"path",        "cycle",   "complete", "empty", "star", "multipartite",
          "double_star", "barbell", "windmill", "wheel", "s_n3", "petersen", "edges"};
}

Graph family(std::string_view name, std::span<const std::int64_t> params) {
  auto arity = [&](std::size_t k) {
    require(params.size() == k, std::string(name) + ": expected " + std::to_string(k) +
                                    " parameter(s), got " + std::to_string(params.size()));
  };
  auto p = [&](std::size_t i) {
    require(params[i] >= 0, std::string(name) + ": parameters must be non-negative");
    return static_cast<std::size_t>(params[i]);
  };
  if (name == "path") return arity(1), path(p(0));
  if (name == "cycle") return arity(1), cycle(p(0));
  if (name == "complete") return arity(1), complete(p(0));
  if (name == "empty") return arity(1), empty(p(0));
  if (name == "star") return arity(1), star(p(0));
  if (name == "double_star") return arity(2), double_star(p(0), p(1));
  if (name == "barbell") return arity(1), barbell(p(0));
  if (name == "windmill") return arity(2), windmill(p(0), p(1));
  if (name == "wheel") return arity(1), wheel(p(0));
  if (name == "s_n3") return arity(1), s_n3(p(0));
  if (name == "petersen") return arity(0), petersen();
  if (name == "multipartite") {
    require(!params.empty(), "multipartite: need at least one part size");
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < params.size(); ++i) sizes.push_back(p(i));
    return multipartite(sizes);
  }
  if (name == "edges") {
    require(!params.empty() && params.size() % 2 == 1, "edges: expected n followed by vertex pairs");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < params.size(); i += 2) edges.emplace_back(p(i), p(i + 1));
    return build_graph(p(0), edges);
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

}  // namespace eccspec
