#pragma once

// Reference computations that share no code path with the library: all-pairs
// distances by Floyd-Warshall, the eccentricity matrix straight from its
// definition, and seeded random inputs.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "eccspec/graph.hpp"
#include "eccspec/int_matrix.hpp"

namespace brute {

constexpr std::int64_t kFar = 1 << 20;

inline std::vector<std::vector<std::int64_t>> floyd_warshall(const eccspec::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline eccspec::IntMatrix ecc_matrix(const eccspec::Graph& g) {
  const auto d = floyd_warshall(g);
  const std::size_t n = g.order();
  std::vector<std::int64_t> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i] = *std::max_element(d[i].begin(), d[i].end());
  eccspec::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d[i][j] == std::min(e[i], e[j])) m(i, j) = d[i][j];
  return m;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline eccspec::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::vector<eccspec::Edge> edges;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (u(rng) < p) edges.emplace_back(a, b);
  return eccspec::build_graph(n, edges);
}

// Random spanning tree plus extra edges, so the result is always connected.
inline eccspec::Graph random_connected(std::mt19937_64& rng, std::size_t n, double extra = 0.3) {
  std::vector<eccspec::Edge> edges;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (u(rng) < extra) edges.emplace_back(a, b);
  return eccspec::build_graph(n, edges);
}

// Signature invariant under relabelling: sorted degrees plus the sorted
// multiset of sorted distance rows.
inline std::vector<std::vector<std::int64_t>> signature(const eccspec::Graph& g) {
  const auto d = floyd_warshall(g);
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> degrees;
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto row = d[i];
    std::sort(row.begin(), row.end());
    rows.push_back(row);
    degrees.push_back(static_cast<std::int64_t>(g.degree(i)));
  }
  std::sort(rows.begin(), rows.end());
  std::sort(degrees.begin(), degrees.end());
  rows.push_back(degrees);
  return rows;
}

}  // namespace brute
