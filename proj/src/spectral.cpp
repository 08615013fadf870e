#include "eccspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <stdexcept>

namespace eccspec {

Spectrum::Spectrum(std::vector<Eigenvalue> groups) : groups_(std::move(groups)) {
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (groups_[i].mult == 0) throw std::invalid_argument("Spectrum: zero multiplicity");
    if (i > 0 && !(groups_[i].value < groups_[i - 1].value))
      throw std::invalid_argument("Spectrum: values must be strictly decreasing");
    order_ += groups_[i].mult;
  }
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  out.reserve(order_);
  for (const auto& g : groups_) out.insert(out.end(), g.mult, g.value);
  return out;
}

double Spectrum::sum() const {
  double s = 0;
  for (const auto& g : groups_) s += g.value * static_cast<double>(g.mult);
  return s;
}

Spectrum Spectrum::without_one(double value, double tol) const {
  std::size_t best = groups_.size();
  for (std::size_t i = 0; i < groups_.size(); ++i)
    if (std::fabs(groups_[i].value - value) <= tol &&
        (best == groups_.size() ||
         std::fabs(groups_[i].value - value) < std::fabs(groups_[best].value - value)))
      best = i;
  if (best == groups_.size())
    throw std::domain_error("spectrum has no eigenvalue near " + std::to_string(value));
  std::vector<Eigenvalue> g = groups_;
  if (--g[best].mult == 0) g.erase(g.begin() + static_cast<std::ptrdiff_t>(best));
  return Spectrum(std::move(g));
}

Spectrum Spectrum::scaled(double factor) const {
  std::vector<double> v = values();
  for (auto& x : v) x *= factor;
  std::sort(v.begin(), v.end(), std::greater<>());
  return group_spectrum(v);
}

Spectrum operator+(const Spectrum& a, const Spectrum& b) {
  std::vector<double> v = a.values();
  const auto w = b.values();
  v.insert(v.end(), w.begin(), w.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return group_spectrum(v);
}

double default_group_tol(std::span<const double> eigs) {
  double m = 1;
  for (double x : eigs) m = std::max(m, std::fabs(x));
  return 1e-6 * m;
}

Spectrum group_spectrum(std::span<const double> eigs, double tol) {
  std::vector<Eigenvalue> groups;
  std::size_t i = 0;
  while (i < eigs.size()) {
    std::size_t j = i + 1;
    double sum = eigs[i];
    while (j < eigs.size() && std::fabs(eigs[j - 1] - eigs[j]) <= tol) sum += eigs[j++];
    groups.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  return Spectrum(std::move(groups));
}

Spectrum group_spectrum(std::span<const double> eigs) {
  return group_spectrum(eigs, default_group_tol(eigs));
}

std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("sym_eigenvalues: matrix is not square");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("sym_eigenvalues: matrix is not symmetric");
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("sym_eigenvalues: no convergence");
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Eigen::MatrixXd to_dense(const IntMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = static_cast<double>(m(i, j));
  return d;
}

std::vector<double> sym_eigenvalues(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("sym_eigenvalues: matrix is not symmetric");
  return sym_eigenvalues(to_dense(m));
}

Spectrum ecc_spectrum(const EccMatrix& e) { return group_spectrum(sym_eigenvalues(e.entries())); }
Spectrum ecc_spectrum(const Graph& g) { return ecc_spectrum(ecc_matrix(g)); }
Spectrum adjacency_spectrum(const Graph& g) {
  return group_spectrum(sym_eigenvalues(g.adjacency_matrix()));
}

IntPoly char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  using BigMat = std::vector<BigInt>;
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  BigMat mk(n * n, BigInt(0));  // M_0 = 0
  BigMat amk(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // mk <- A * mk + c[n-k+1] I
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (m(i, l) != 0) acc += m(i, l) * mk[l * n + j];
        amk[i * n + j] = std::move(acc);
      }
    for (std::size_t i = 0; i < n; ++i) amk[i * n + i] += c[n - k + 1];
    std::swap(mk, amk);
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (m(i, l) != 0) tr += m(i, l) * mk[l * n + i];
    if (tr % k != 0) throw std::logic_error("char_poly: inexact trace division");
    c[n - k] = -tr / k;
  }
  return IntPoly(std::move(c));
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

double energy(const Spectrum& s) {
  double e = 0;
  for (const auto& g : s.groups()) e += std::fabs(g.value) * static_cast<double>(g.mult);
  return e;
}

double spectral_radius(const Spectrum& s) {
  double r = 0;
  for (const auto& g : s.groups()) r = std::max(r, std::fabs(g.value));
  return r;
}

double least_eigenvalue(const Spectrum& s) {
  if (s.empty()) throw std::domain_error("least_eigenvalue of an empty spectrum");
  return s.groups().back().value;
}

Inertia inertia(const Spectrum& s, double tol) {
  Inertia in;
  for (const auto& g : s.groups()) {
    if (g.value > tol) in.positive += g.mult;
    else if (g.value < -tol) in.negative += g.mult;
    else in.zero += g.mult;
  }
  return in;
}

Inertia inertia(const Spectrum& s) {
  const auto v = s.values();
  return inertia(s, default_group_tol(v));
}

Spectrum kronecker_spectrum(const Spectrum& a, const Spectrum& b) {
  std::vector<double> v;
  v.reserve(a.order() * b.order());
  for (const auto& x : a.groups())
    for (const auto& y : b.groups()) v.insert(v.end(), x.mult * y.mult, x.value * y.value);
  std::sort(v.begin(), v.end(), std::greater<>());
  return group_spectrum(v);
}

Spectrum complement_regular_spectrum(std::size_t n, std::size_t r, const Spectrum& adj) {
  if (adj.order() != n)
    throw std::invalid_argument("complement_regular_spectrum: spectrum order differs from n");
  const double tol = default_group_tol(adj.values());
  const Spectrum rest = adj.without_one(static_cast<double>(r), tol);
  std::vector<double> v{static_cast<double>(n) - static_cast<double>(r) - 1};
  for (double x : rest.values()) v.push_back(-(x + 1));
  std::sort(v.begin(), v.end(), std::greater<>());
  return group_spectrum(v);
}

namespace {

void check_quotient(const QuotientSpec& q) {
  const std::size_t k = q.sizes.size();
  if (k == 0) throw std::invalid_argument("QuotientSpec: no blocks");
  if (static_cast<std::size_t>(q.s.rows()) != k || static_cast<std::size_t>(q.s.cols()) != k ||
      q.diagonal.size() != k)
    throw std::invalid_argument("QuotientSpec: dimension mismatch");
  for (auto n : q.sizes)
    if (n == 0) throw std::invalid_argument("QuotientSpec: block sizes must be positive");
}

}  // namespace

Eigen::MatrixXd expand_quotient(const QuotientSpec& q) {
  check_quotient(q);
  const std::size_t k = q.sizes.size();
  std::vector<std::size_t> start(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) start[i + 1] = start[i] + q.sizes[i];
  Eigen::MatrixXd m(start[k], start[k]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m.block(start[i], start[j], q.sizes[i], q.sizes[j]).setConstant(q.s(i, j));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = start[i]; r < start[i + 1]; ++r) m(r, r) += q.diagonal[i];
  return m;
}

Eigen::MatrixXd quotient_matrix(const QuotientSpec& q) {
  check_quotient(q);
  const std::size_t k = q.sizes.size();
  Eigen::MatrixXd m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m(i, j) = q.s(i, j) * static_cast<double>(q.sizes[j]) + (i == j ? q.diagonal[i] : 0.0);
  return m;
}

std::vector<double> quotient_eigenvalues(const QuotientSpec& q) {
  check_quotient(q);
  const std::size_t k = q.sizes.size();
  if (q.s == q.s.transpose()) {
    // D^{1/2} Q D^{-1/2} = D^{1/2} S D^{1/2} + P is symmetric when S is.
    Eigen::MatrixXd b(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        b(i, j) = q.s(i, j) * std::sqrt(static_cast<double>(q.sizes[i]) *
                                        static_cast<double>(q.sizes[j])) +
                  (i == j ? q.diagonal[i] : 0.0);
    return sym_eigenvalues(b);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(quotient_matrix(q), false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("quotient_eigenvalues: no convergence");
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const auto z = solver.eigenvalues()(i);
    if (std::fabs(z.imag()) > 1e-8)
      std::clog << "warning: quotient eigenvalue " << z.real() << " has imaginary part "
                << z.imag() << "; truncated\n";
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Spectrum quotient_spectrum(const QuotientSpec& q) {
  std::vector<double> v = quotient_eigenvalues(q);
  for (std::size_t i = 0; i < q.sizes.size(); ++i) v.insert(v.end(), q.sizes[i] - 1, q.diagonal[i]);
  std::sort(v.begin(), v.end(), std::greater<>());
  return group_spectrum(v);
}

}  // namespace eccspec
