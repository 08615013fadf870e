#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "eccspec/ecc_matrix.hpp"
#include "eccspec/graph.hpp"
#include "eccspec/int_matrix.hpp"
#include "eccspec/polynomial.hpp"

namespace eccspec {

struct Eigenvalue {
  double value = 0;
  std::size_t mult = 0;

  bool operator==(const Eigenvalue&) const = default;
};

// Distinct eigenvalues in strictly decreasing order with multiplicities.
class Spectrum {
 public:
  Spectrum() = default;
  // Groups must already be strictly decreasing with positive multiplicities.
  explicit Spectrum(std::vector<Eigenvalue> groups);

  const std::vector<Eigenvalue>& groups() const { return groups_; }
  std::size_t order() const { return order_; }
  bool empty() const { return groups_.empty(); }

  // All eigenvalues with multiplicity, descending.
  std::vector<double> values() const;
  double sum() const;

  // Removes one copy of the eigenvalue nearest `value`; throws
  // std::domain_error if no eigenvalue lies within `tol`.
  Spectrum without_one(double value, double tol) const;
  Spectrum scaled(double factor) const;

  friend Spectrum operator+(const Spectrum& a, const Spectrum& b);  // multiset union

 private:
  std::vector<Eigenvalue> groups_;
  std::size_t order_ = 0;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  std::size_t order() const { return positive + zero + negative; }
  bool operator==(const Inertia&) const = default;
};

// Default merge tolerance for eigenvalue grouping: 1e-6 * max(1, max |lambda|).
double default_group_tol(std::span<const double> eigs);

// Merges runs of sorted (descending) eigenvalues whose consecutive gaps are
// within tol; each group is represented by the mean of its members.
Spectrum group_spectrum(std::span<const double> eigs, double tol);
Spectrum group_spectrum(std::span<const double> eigs);

// All eigenvalues of a symmetric matrix, descending. Throws
// std::invalid_argument on non-square or non-symmetric input.
std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m);
std::vector<double> sym_eigenvalues(const IntMatrix& m);

Eigen::MatrixXd to_dense(const IntMatrix& m);

// Convenience: grouped spectra of eps(G) and A(G).
Spectrum ecc_spectrum(const Graph& g);
Spectrum ecc_spectrum(const EccMatrix& e);
Spectrum adjacency_spectrum(const Graph& g);

// det(lambda I - M), computed exactly.
IntPoly char_poly(const IntMatrix& m);
// Exact determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& m);

double energy(const Spectrum& s);
double spectral_radius(const Spectrum& s);
double least_eigenvalue(const Spectrum& s);
Inertia inertia(const Spectrum& s, double tol);
Inertia inertia(const Spectrum& s);  // tol = default_group_tol of the values

// Spectrum of A (x) B: all pairwise products, regrouped.
Spectrum kronecker_spectrum(const Spectrum& a, const Spectrum& b);

// Spectrum of A(complement G) for an r-regular graph of order n, given
// Spec(A(G)): one copy of r becomes n - r - 1, every other lambda becomes
// -(lambda + 1). Throws std::domain_error if r is not an eigenvalue.
Spectrum complement_regular_spectrum(std::size_t n, std::size_t r, const Spectrum& adj);

// Block matrix with blocks s_ij J (i != j) and s_ii J + p_i I on the diagonal.
struct QuotientSpec {
  std::vector<std::size_t> sizes;
  Eigen::MatrixXd s;             // k x k block constants
  std::vector<double> diagonal;  // p_i
};

// Expanded n x n block matrix.
Eigen::MatrixXd expand_quotient(const QuotientSpec& q);
// Equitable quotient matrix: q_ij = s_ij n_j (i != j), q_ii = s_ii n_i + p_i.
Eigen::MatrixXd quotient_matrix(const QuotientSpec& q);
// Eigenvalues of the quotient matrix only, descending.
std::vector<double> quotient_eigenvalues(const QuotientSpec& q);
// Spec(Q) together with p_i of multiplicity n_i - 1.
Spectrum quotient_spectrum(const QuotientSpec& q);

}  // namespace eccspec
