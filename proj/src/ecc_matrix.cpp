#include "eccspec/ecc_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace eccspec {

EccMatrix::EccMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("EccMatrix: not square");
  if (!entries_.is_symmetric()) throw std::invalid_argument("EccMatrix: not symmetric");
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0) throw std::invalid_argument("EccMatrix: nonzero diagonal");
    for (std::size_t j = 0; j < entries_.cols(); ++j)
      if (entries_(i, j) < 0) throw std::invalid_argument("EccMatrix: negative entry");
  }
}

EccMatrix ecc_matrix(const MetricProfile& p) {
  const std::size_t n = p.ecc.size();
  IntMatrix e = IntMatrix::square(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && p.dist(u, v) == std::min(p.ecc[u], p.ecc[v])) e(u, v) = p.dist(u, v);
  return EccMatrix(std::move(e));
}

EccMatrix ecc_matrix(const Graph& g) { return ecc_matrix(metric_profile(g)); }

FactorPartition factor_partition(const JoinScheme& scheme) {
  FactorPartition out(scheme.k());
  for (std::size_t i = 0; i < scheme.k(); ++i) {
    const Graph& g = scheme.factor(i);
    for (Vertex x = 0; x < g.order(); ++x)
      (g.degree(x) + 1 == g.order() ? out[i].dominating : out[i].other).push_back(x);
  }
  return out;
}

EccMatrix HJoinEccMatrix::natural_order() const {
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) inverse[order[r]] = r;
  return matrix.permuted(inverse);
}

HJoinEccMatrix ecc_matrix_hjoin(const JoinScheme& scheme) {
  const MetricProfile host = metric_profile(scheme.host());
  const EccMatrix a = ecc_matrix(host);
  const FactorPartition parts = factor_partition(scheme);
  const std::size_t k = scheme.k();

  // Row ranges of each block and of its dominating part.
  std::vector<std::size_t> start(k + 1, 0), split(k, 0);
  std::vector<std::size_t> order;
  order.reserve(scheme.total_order());
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex x : parts[i].dominating) order.push_back(scheme.offset(i) + x);
    split[i] = order.size();
    for (Vertex x : parts[i].other) order.push_back(scheme.offset(i) + x);
    start[i + 1] = order.size();
  }

  IntMatrix m = IntMatrix::square(order.size());
  auto fill = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1, std::int64_t v) {
    for (std::size_t r = r0; r < r1; ++r)
      for (std::size_t c = c0; c < c1; ++c) m(r, c) = v;
  };

  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t ei = host.ecc[i];
    // Off-diagonal blocks.
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const std::int64_t aij = a(i, j);
      const std::int64_t ej = host.ecc[j];
      if (aij >= 2) {
        fill(start[i], start[i + 1], start[j], start[j + 1], aij);
      } else if (aij == 1) {
        if (ei == 1 && ej == 1) {
          fill(start[i], start[i + 1], start[j], start[j + 1], 1);
          fill(split[i], start[i + 1], split[j], start[j + 1], 0);
        } else if (ei == 1) {
          fill(start[i], split[i], start[j], start[j + 1], 1);
        } else if (ej == 1) {
          fill(start[i], start[i + 1], start[j], split[j], 1);
        }
      }
    }
    // Diagonal block.
    if (ei <= 2) {
      if (ei == 1) {
        fill(start[i], split[i], start[i], start[i + 1], 1);
        fill(split[i], start[i + 1], start[i], split[i], 1);
        for (std::size_t r = start[i]; r < split[i]; ++r) m(r, r) = 0;
      }
      // 2A of the complement of the subgraph induced by the non-dominating part.
      const auto& other = parts[i].other;
      const Graph& g = scheme.factor(i);
      for (std::size_t x = 0; x < other.size(); ++x)
        for (std::size_t y = 0; y < other.size(); ++y)
          if (x != y && !g.adjacent(other[x], other[y])) m(split[i] + x, split[i] + y) = 2;
    }
  }
  return HJoinEccMatrix{EccMatrix(std::move(m)), std::move(order)};
}

}  // namespace eccspec
