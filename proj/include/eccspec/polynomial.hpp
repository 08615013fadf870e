#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eccspec {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial with arbitrary-precision integer coefficients, stored in
// ascending order of degree. The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  IntPoly(std::initializer_list<long long> ascending);

  static IntPoly constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }
  // x - root
  static IntPoly linear(BigInt root) { return IntPoly(std::vector<BigInt>{-root, BigInt(1)}); }
  static IntPoly monomial(std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  long double evaluate(long double x) const;
  // Sum |c_i| |x|^i, the natural scale for judging |evaluate(x)|.
  long double evaluate_abs(long double x) const;
  BigInt evaluate(const BigInt& x) const;

  IntPoly derivative() const;
  BigInt content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& s, const IntPoly& a);
  IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }
  IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
  IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }
  IntPoly pow(std::size_t e) const;

  bool operator==(const IntPoly& other) const = default;

  // Human-readable form in descending powers of `var`.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Quotient and remainder of a / b over the integers. Throws std::domain_error
// unless the division is exact (b must divide a with an integer quotient).
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

// Primitive greatest common divisor (positive leading coefficient).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Factors p = c * prod_j f_j^j with each f_j square-free and pairwise coprime.
// Returns the pairs (f_j, j) for non-constant f_j, in increasing j.
std::vector<std::pair<IntPoly, std::size_t>> squarefree_decomposition(const IntPoly& p);

// All real roots of p with multiplicity, ascending, for a polynomial whose
// roots are all real. Throws std::domain_error if p turns out not to be
// real-rooted.
std::vector<long double> real_roots(const IntPoly& p);

}  // namespace eccspec
