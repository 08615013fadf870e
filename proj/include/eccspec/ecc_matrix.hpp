#pragma once

#include <cstddef>
#include <vector>

#include "eccspec/graph.hpp"
#include "eccspec/int_matrix.hpp"
#include "eccspec/operators.hpp"

namespace eccspec {

// Eccentricity matrix: entry (u, v) is d(u, v) when d(u, v) = min(e(u), e(v)),
// zero otherwise. Symmetric, zero diagonal, non-negative.
class EccMatrix {
 public:
  // Throws std::invalid_argument if `entries` is not square, symmetric,
  // zero-diagonal and non-negative.
  explicit EccMatrix(IntMatrix entries);

  std::size_t order() const { return entries_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const { return entries_; }

  EccMatrix permuted(const std::vector<std::size_t>& perm) const {
    return EccMatrix(entries_.permuted(perm));
  }

  bool operator==(const EccMatrix& other) const = default;

 private:
  IntMatrix entries_;
};

// Definitional construction from all-pairs distances. Throws
// DisconnectedGraphError on disconnected input.
EccMatrix ecc_matrix(const Graph& g);
EccMatrix ecc_matrix(const MetricProfile& profile);

// Split of one factor's vertices into dominating (degree n_i - 1) and the
// rest, each in increasing vertex order.
struct FactorSplit {
  std::vector<Vertex> dominating;  // U_{i1}
  std::vector<Vertex> other;       // U_{i2}
};

using FactorPartition = std::vector<FactorSplit>;

FactorPartition factor_partition(const JoinScheme& scheme);

// Eccentricity matrix of H[G_1..G_k] assembled block by block from eps(H)
// and the factor partitions, without computing any distances in the joined
// graph.
//
// Rows are in partition order: blocks 1..k, and within block i the
// dominating vertices of G_i precede the others. order[r] is the index of
// row r's vertex in h_join(scheme), so
//   ecc_matrix(h_join(scheme)).permuted(order) == matrix.
struct HJoinEccMatrix {
  EccMatrix matrix;
  std::vector<std::size_t> order;

  // The same matrix relabelled to h_join's natural vertex order.
  EccMatrix natural_order() const;
};

HJoinEccMatrix ecc_matrix_hjoin(const JoinScheme& scheme);

}  // namespace eccspec
