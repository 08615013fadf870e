#include "eccspec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eccspec {

namespace {

long double to_ld(const BigInt& x) { return x.convert_to<long double>(); }

int sign_of(long double x) { return (x > 0) - (x < 0); }

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  std::vector<BigInt> r = a.coeffs();
  const std::size_t db = b.degree();
  const BigInt& lb = b.leading();
  while (r.size() > db && !r.empty()) {
    const std::size_t shift = r.size() - 1 - db;
    const BigInt lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lr * b.coeffs()[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

// Ascending roots of a square-free polynomial with only real roots.
std::vector<long double> simple_real_roots(const IntPoly& p) {
  const std::size_t d = p.degree();
  if (d == 0) return {};
  if (d == 1) return {-to_ld(p.coeff(0)) / to_ld(p.coeff(1))};

  long double bound = 0;
  const long double lead = std::fabs(to_ld(p.leading()));
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::fabs(to_ld(p.coeff(i))) / lead);
  bound += 1;

  std::vector<long double> cuts{-bound};
  for (long double x : simple_real_roots(p.derivative().primitive_part())) cuts.push_back(x);
  cuts.push_back(bound);

  std::vector<long double> roots;
  roots.reserve(d);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    long double lo = cuts[i], hi = cuts[i + 1];
    long double flo = p.evaluate(lo), fhi = p.evaluate(hi);
    if (flo == 0) { roots.push_back(lo); continue; }
    if (fhi == 0) { roots.push_back(hi); continue; }
    if (sign_of(flo) == sign_of(fhi))
      throw std::domain_error("real_roots: polynomial is not real-rooted");
    for (int it = 0; it < 200; ++it) {
      const long double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      const long double fm = p.evaluate(mid);
      if (fm == 0) { lo = hi = mid; break; }
      if (sign_of(fm) == sign_of(flo)) { lo = mid; flo = fm; } else { hi = mid; }
    }
    roots.push_back(lo + (hi - lo) / 2);
  }
  return roots;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> ascending) {
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(std::size_t degree) {
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c.back() = 1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long double IntPoly::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_ld(*it);
  return acc;
}

long double IntPoly::evaluate_abs(long double x) const {
  long double acc = 0;
  const long double ax = std::fabs(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::fabs(to_ld(*it));
  return acc;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
  return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c = coeffs_;
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> c = coeffs_;
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
  std::vector<BigInt> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(std::size_t e) const {
  IntPoly out = constant(1), base = *this;
  while (e) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_divide: division is not exact");
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - b.degree() + 1);
  const std::size_t db = b.degree();
  for (std::size_t s = q.size(); s-- > 0;) {
    const BigInt& top = r[s + db];
    if (top % b.leading() != 0) throw std::domain_error("exact_divide: division is not exact");
    q[s] = top / b.leading();
    for (std::size_t i = 0; i <= db; ++i) r[s + i] -= q[s] * b.coeffs()[i];
  }
  for (const auto& c : r)
    if (c != 0) throw std::domain_error("exact_divide: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

std::vector<std::pair<IntPoly, std::size_t>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  // chain[j] = gcd(chain[j-1], chain[j-1]') holds the roots of multiplicity > j.
  std::vector<IntPoly> chain{p.primitive_part()};
  while (chain.back().degree() > 0) chain.push_back(gcd(chain.back(), chain.back().derivative()));
  // at_least[j] has the roots of multiplicity >= j + 1, each once.
  std::vector<IntPoly> at_least;
  for (std::size_t j = 1; j < chain.size(); ++j)
    at_least.push_back(exact_divide(chain[j - 1], chain[j]).primitive_part());
  at_least.push_back(IntPoly::constant(1));

  std::vector<std::pair<IntPoly, std::size_t>> out;
  for (std::size_t j = 0; j + 1 < at_least.size(); ++j) {
    IntPoly exactly = exact_divide(at_least[j], at_least[j + 1]).primitive_part();
    if (exactly.degree() > 0) out.emplace_back(std::move(exactly), j + 1);
  }
  return out;
}

std::vector<long double> real_roots(const IntPoly& p) {
  std::vector<long double> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    for (long double r : simple_real_roots(factor)) roots.insert(roots.end(), mult, r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace eccspec
