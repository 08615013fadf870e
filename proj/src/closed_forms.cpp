#include "eccspec/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eccspec/ecc_matrix.hpp"
#include "eccspec/families.hpp"

namespace eccspec {

namespace {

using std::numbers::pi;

Spectrum from_values(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return group_spectrum(v);
}

void push(std::vector<double>& v, double x, std::size_t mult = 1) { v.insert(v.end(), mult, x); }

Spectrum spectrum_of_roots(const IntPoly& p) {
  const auto roots = real_roots(p);
  return from_values(std::vector<double>(roots.begin(), roots.end()));
}

bool all_hold(const std::vector<Precondition>& pre) {
  return std::all_of(pre.begin(), pre.end(), [](const Precondition& p) { return p.holds; });
}

// A term w / (lambda - pole). Sum of such terms times prod (lambda - pole_i)
// is returned as the polynomial sum_i w_i prod_{j != i} (lambda - pole_j).
struct PoleTerm {
  BigInt weight;
  BigInt pole;
};

IntPoly pole_product(const std::vector<PoleTerm>& terms) {
  IntPoly p = IntPoly::constant(1);
  for (const auto& t : terms) p *= IntPoly::linear(t.pole);
  return p;
}

IntPoly cleared_sum(const std::vector<PoleTerm>& terms) {
  IntPoly s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    IntPoly prod = IntPoly::constant(terms[i].weight);
    for (std::size_t j = 0; j < terms.size(); ++j)
      if (j != i) prod *= IntPoly::linear(terms[j].pole);
    s += prod;
  }
  return s;
}

std::vector<PoleTerm> leaf_terms(const std::vector<RegularFactorParams>& leaves) {
  std::vector<PoleTerm> terms;
  for (const auto& p : leaves) {
    const BigInt n(p.n), k(p.k);
    terms.push_back({n, 2 * (k - n)});
  }
  return terms;
}

// Hub complete on n0 vertices, as stated: lambda^(n0-1) [lambda P - (2 lambda + n0) S].
IntPoly star_core_complete_stated(std::size_t n0, const std::vector<PoleTerm>& terms) {
  const IntPoly lambda = IntPoly::monomial(1);
  const IntPoly two_lambda_n0{static_cast<long long>(n0), 2};
  return IntPoly::monomial(n0 - 1) * (lambda * pole_product(terms) - two_lambda_n0 * cleared_sum(terms));
}

// Hub complete on n0 vertices, as it holds: the hub block is J - I, which
// contributes (lambda + 1)^(n0-1) and shifts lambda to mu = lambda - n0 + 1.
IntPoly star_core_complete_corrected(std::size_t n0, const std::vector<PoleTerm>& terms) {
  const long long l = static_cast<long long>(n0);
  const IntPoly mu{1 - l, 1};
  const IntPoly two_mu_n0{2 * (1 - l) + l, 2};
  return IntPoly{1, 1}.pow(n0 - 1) * (mu * pole_product(terms) - two_mu_n0 * cleared_sum(terms));
}

IntPoly star_core_noncomplete(const std::vector<PoleTerm>& terms) {
  return pole_product(terms) - BigInt(2) * cleared_sum(terms);
}

// 2 Spec(A(complement G_i)) with one copy of 2k_i removed.
Spectrum leaf_residual(const RegularFactorParams& p, const Spectrum& complement_spectrum) {
  const double tol = 1e-6 * std::max(1.0, spectral_radius(complement_spectrum));
  return complement_spectrum.without_one(static_cast<double>(p.k), tol).scaled(2.0);
}

Precondition spectrum_matches(const std::string& name, const RegularFactorParams& p,
                              const Spectrum& s) {
  bool ok = s.order() == p.n && p.k < p.n;
  if (ok) {
    const double tol = 1e-6 * std::max(1.0, static_cast<double>(p.k));
    ok = std::fabs(s.groups().front().value - static_cast<double>(p.k)) <= tol;
  }
  return {name, ok};
}

Inertia add(Inertia a, const Inertia& b) {
  a.positive += b.positive;
  a.zero += b.zero;
  a.negative += b.negative;
  return a;
}

FactoredCharPoly factored(IntPoly core, Spectrum residual) {
  return FactoredCharPoly{std::move(core), std::move(residual)};
}

Spectrum cycle_values(std::size_t n, double scale) {
  std::vector<double> v;
  if (n % 2 == 0) {
    const double t = static_cast<double>(n / 2);
    push(v, scale * t, n / 2);
    push(v, -scale * t, n / 2);
  } else {
    const double t2 = static_cast<double>(n - 1);
    for (std::size_t j = 1; j <= n; ++j)
      v.push_back(scale * t2 * std::cos(2 * pi * static_cast<double>(j) / static_cast<double>(n)));
  }
  return from_values(std::move(v));
}

QuotientSpec host_quotient(const Graph& h, const std::vector<std::size_t>& sizes) {
  const EccMatrix e = ecc_matrix(h);
  QuotientSpec q;
  q.sizes = sizes;
  q.s = to_dense(e.entries());
  q.diagonal.assign(sizes.size(), 0.0);
  return q;
}

std::size_t total(const std::vector<std::size_t>& sizes) {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  return n;
}

bool sizes_positive(const std::vector<std::size_t>& sizes) {
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s >= 1; });
}

}  // namespace

RegularFactor regular_factor(const Graph& g) {
  const Graph c = complement(g);
  const auto k = is_regular(c);
  if (!k) throw std::invalid_argument("regular_factor: complement is not regular");
  return {{g.order(), *k}, adjacency_spectrum(c)};
}

long double FactoredCharPoly::evaluate(long double x) const {
  long double acc = core.evaluate(x);
  for (const auto& g : residual.groups())
    acc *= std::pow(x - static_cast<long double>(g.value), static_cast<long double>(g.mult));
  return acc;
}

long double FactoredCharPoly::scaled_magnitude(long double x) const {
  long double scale = core.evaluate_abs(x);
  for (const auto& g : residual.groups())
    scale *= std::pow(std::max(1.0L, std::fabs(x) + std::fabs(static_cast<long double>(g.value))),
                      static_cast<long double>(g.mult));
  if (scale == 0) return 0;
  return std::fabs(evaluate(x)) / scale;
}

Spectrum FactoredCharPoly::roots() const { return spectrum_of_roots(core) + residual; }

bool ClosedFormResult::supported() const { return all_hold(preconditions); }

Spectrum ClosedFormResult::predicted_spectrum() const {
  if (spectrum) return *spectrum;
  if (charpoly) return charpoly->roots();
  throw std::logic_error("closed form carries neither spectrum nor charpoly");
}

std::vector<std::string> closed_form_ids() {
  return {cf::kCycle,          cf::kRad3Quotient,
          cf::kLexRad3,        cf::kLexCycle,
          cf::kCompleteHostJoin, cf::kCompleteMultipartite,
          cf::kRad2Complete,   cf::kLexComplete,
          cf::kP4Join,         cf::kDoubleStar,
          cf::kBarbell,        cf::kStarJoinHubComplete,
          cf::kStarJoinHubNoncomplete, cf::kUniformStarJoin,
          cf::kCliqueCoalescence, cf::kK1JoinRegular,
          cf::kWheel,          cf::kSn3,
          cf::kStar,           cf::kWindmill,
          cf::kCorona};
}

ClosedFormResult spec_cycle(std::size_t n) {
  ClosedFormResult r;
  r.id = cf::kCycle;
  r.preconditions = {{"n >= 3", n >= 3}};
  r.spectrum = cycle_values(std::max<std::size_t>(n, 1), 1.0);
  return r;
}

ClosedFormResult spec_hjoin_rad3(const Graph& h, const std::vector<std::size_t>& sizes) {
  ClosedFormResult r;
  r.id = cf::kRad3Quotient;
  const bool connected = is_connected(h);
  const bool sized = sizes.size() == h.order() && sizes_positive(sizes);
  r.preconditions = {{"host connected", connected},
                     {"one positive size per host vertex", sized},
                     {"rad(H) >= 3", connected && metric_profile(h).radius >= 3}};
  if (!connected || !sized) return r;
  r.spectrum = quotient_spectrum(host_quotient(h, sizes));
  Inertia in = inertia(ecc_spectrum(h));
  in.zero += total(sizes) - sizes.size();
  r.inertia = in;
  return r;
}

ClosedFormResult spec_lex_rad3(const Graph& h, std::size_t m) {
  ClosedFormResult r;
  r.id = cf::kLexRad3;
  const bool connected = is_connected(h);
  r.preconditions = {{"host connected", connected},
                     {"m >= 1", m >= 1},
                     {"rad(H) >= 3", connected && metric_profile(h).radius >= 3}};
  if (!connected || m == 0) return r;
  std::vector<Eigenvalue> j{{static_cast<double>(m), 1}};
  if (m > 1) j.push_back({0.0, m - 1});
  r.spectrum = kronecker_spectrum(ecc_spectrum(h), Spectrum(std::move(j)));
  return r;
}

ClosedFormResult spec_lex_cycle(std::size_t n, std::size_t m) {
  ClosedFormResult r;
  r.id = cf::kLexCycle;
  r.preconditions = {{"n >= 6", n >= 6}, {"m >= 1", m >= 1}};
  if (n < 3 || m == 0) return r;
  Spectrum s = cycle_values(n, static_cast<double>(m));
  if (m > 1) s = s + Spectrum({{0.0, n * (m - 1)}});
  r.spectrum = s;
  return r;
}

ClosedFormResult spec_complete_host_join(const std::vector<Graph>& factors) {
  ClosedFormResult r;
  r.id = cf::kCompleteHostJoin;
  bool non_complete = true;
  for (const auto& g : factors)
    if (g.order() < 2 || max_degree(g) + 2 > g.order()) non_complete = false;
  r.preconditions = {{"k >= 2", factors.size() >= 2}, {"Delta(G_i) <= n_i - 2", non_complete}};
  Spectrum s;
  for (const auto& g : factors) s = s + adjacency_spectrum(complement(g)).scaled(2.0);
  r.spectrum = s;
  return r;
}

ClosedFormResult spec_complete_multipartite(const std::vector<std::size_t>& sizes) {
  ClosedFormResult r;
  r.id = cf::kCompleteMultipartite;
  const bool parts = std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s >= 2; });
  r.preconditions = {{"k >= 2", sizes.size() >= 2}, {"n_i >= 2", parts}};
  if (!sizes_positive(sizes)) return r;
  std::vector<double> v;
  push(v, -2.0, total(sizes) - sizes.size());
  for (auto s : sizes) v.push_back(2.0 * (static_cast<double>(s) - 1.0));
  r.spectrum = from_values(std::move(v));
  return r;
}

ClosedFormResult spec_hjoin_rad2_complete(const Graph& h, const std::vector<std::size_t>& sizes,
                                          const std::vector<bool>& complete_flags) {
  ClosedFormResult r;
  r.id = cf::kRad2Complete;
  const bool connected = is_connected(h);
  const bool sized = sizes.size() == h.order() && sizes_positive(sizes);
  bool rad2 = false, flagged = complete_flags.size() == h.order();
  if (connected) {
    const MetricProfile mp = metric_profile(h);
    rad2 = mp.radius >= 2;
    for (std::size_t i = 0; flagged && i < h.order(); ++i)
      if (mp.ecc[i] == 2 && !complete_flags[i]) flagged = false;
  }
  r.preconditions = {{"host connected", connected},
                     {"one positive size per host vertex", sized},
                     {"rad(H) >= 2", rad2},
                     {"G_i complete whenever e_H(i) = 2", flagged}};
  if (!connected || !sized) return r;
  r.spectrum = quotient_spectrum(host_quotient(h, sizes));
  return r;
}

ClosedFormResult spec_lex_complete(const Graph& h, std::size_t m) {
  ClosedFormResult r;
  r.id = cf::kLexComplete;
  const bool connected = is_connected(h);
  r.preconditions = {{"host connected", connected},
                     {"m >= 1", m >= 1},
                     {"rad(H) >= 2", connected && metric_profile(h).radius >= 2}};
  if (!connected || m == 0) return r;
  Spectrum s = ecc_spectrum(h).scaled(static_cast<double>(m));
  if (m > 1) s = s + Spectrum({{0.0, h.order() * (m - 1)}});
  r.spectrum = s;
  return r;
}

IntPoly p4_join_charpoly(std::size_t n1, std::size_t n4) {
  const BigInt a(n1), b(n4);
  const BigInt alpha = 4 * a + 4 * b + 9 * a * b;
  IntPoly quartic(std::vector<BigInt>{16 * a * b, 0, -alpha, 0, 1});
  return IntPoly::monomial(n1 + n4 - 2) * quartic;
}

ClosedFormResult spec_p4_join(std::size_t n1, std::size_t n4) {
  ClosedFormResult r;
  r.id = cf::kP4Join;
  r.preconditions = {{"n1 >= 1", n1 >= 1}, {"n4 >= 1", n4 >= 1}};
  if (n1 == 0 || n4 == 0) return r;
  const double a = static_cast<double>(n1), b = static_cast<double>(n4);
  const double alpha = 4 * a + 4 * b + 9 * a * b;
  const double sb = std::sqrt(alpha * alpha - 64 * a * b);
  const double hi = std::sqrt((alpha + sb) / 2), lo = std::sqrt((alpha - sb) / 2);
  std::vector<double> v{hi, lo, -lo, -hi};
  push(v, 0.0, n1 + n4 - 2);
  r.spectrum = from_values(std::move(v));
  r.energy = std::sqrt(2 * (alpha + sb)) + std::sqrt(2 * (alpha - sb));
  r.rho = hi;
  r.exact_charpoly = p4_join_charpoly(n1, n4);
  return r;
}

ClosedFormResult spec_double_star(std::size_t a, std::size_t b) {
  ClosedFormResult r = spec_p4_join(a, b);
  r.id = cf::kDoubleStar;
  r.preconditions = {{"a >= 1", a >= 1}, {"b >= 1", b >= 1}};
  return r;
}

ClosedFormResult spec_barbell(std::size_t n) {
  ClosedFormResult r;
  r.id = cf::kBarbell;
  r.preconditions = {{"n >= 2", n >= 2}};
  if (n < 2) return r;
  const double m = 3.0 * (static_cast<double>(n) - 1.0);
  const double nn = static_cast<double>(n);
  const double s = std::sqrt(9 * nn * nn - 2 * nn - 7);
  std::vector<double> v{(m + s) / 2, (m - s) / 2, (-m + s) / 2, (-m - s) / 2};
  push(v, 0.0, 2 * (n - 2));
  r.spectrum = from_values(std::move(v));
  r.rho = (m + s) / 2;
  r.exact_charpoly = p4_join_charpoly(n - 1, n - 1);
  return r;
}

ClosedFormResult charpoly_star_join(const RegularFactorParams& hub,
                                    const std::vector<RegularFactorParams>& leaves,
                                    const std::vector<Spectrum>& leaf_spectra,
                                    const std::optional<Spectrum>& hub_spectrum) {
  ClosedFormResult r;
  const bool hub_complete = hub.k == 0;
  r.id = hub_complete ? cf::kStarJoinHubComplete : cf::kStarJoinHubNoncomplete;

  bool shapes = leaf_spectra.size() == leaves.size() && !leaves.empty() && hub.n >= 1;
  r.preconditions.push_back({"m >= 1 with one spectrum per leaf", shapes});
  if (!shapes) return r;
  bool leaves_ok = true;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    leaves_ok = leaves_ok && spectrum_matches("", leaves[i], leaf_spectra[i]).holds;
  r.preconditions.push_back({"complement of each leaf k_i-regular", leaves_ok});
  if (!hub_complete) {
    const bool hub_ok = hub_spectrum && spectrum_matches("", hub, *hub_spectrum).holds;
    r.preconditions.push_back({"complement of hub k_0-regular", hub_ok});
    if (!hub_ok) return r;
  }
  if (leaves.size() == 1) {
    // With a single leaf the host is K_2 and a complete leaf has eccentricity 1.
    r.preconditions.push_back({"single leaf not complete", leaves[0].k > 0});
  }
  if (!leaves_ok) return r;

  const auto terms = leaf_terms(leaves);
  Spectrum residual;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    residual = residual + leaf_residual(leaves[i], leaf_spectra[i]);

  if (hub_complete) {
    r.charpoly = factored(star_core_complete_stated(hub.n, terms), residual);
    if (hub.n >= 2) {
      r.corrected_charpoly = factored(star_core_complete_corrected(hub.n, terms), residual);
      r.notes.push_back("stated form gives lambda^(n0-1) for the hub block J - I; "
                        "the corrected form uses (lambda + 1)^(n0-1) with lambda -> lambda - n0 + 1");
    }
  } else {
    r.charpoly = factored(star_core_noncomplete(terms), residual + hub_spectrum->scaled(2.0));
  }
  return r;
}

ClosedFormResult charpoly_star_join(const Graph& hub, const std::vector<Graph>& leaves) {
  const RegularFactor h = regular_factor(hub);
  std::vector<RegularFactorParams> params;
  std::vector<Spectrum> spectra;
  for (const auto& g : leaves) {
    RegularFactor f = regular_factor(g);
    params.push_back(f.params);
    spectra.push_back(std::move(f.complement_spectrum));
  }
  return charpoly_star_join(h.params, params, spectra,
                            h.params.k == 0 ? std::nullopt : std::optional<Spectrum>(h.complement_spectrum));
}

IntPoly star_join_charpoly_exact(const Graph& hub, const std::vector<Graph>& leaves) {
  const RegularFactor h = regular_factor(hub);
  std::vector<RegularFactorParams> params;
  IntPoly residual = IntPoly::constant(1);
  for (const auto& g : leaves) {
    const RegularFactor f = regular_factor(g);
    params.push_back(f.params);
    const IntMatrix a = complement(g).adjacency_matrix().scaled(2);
    residual *= exact_divide(char_poly(a), IntPoly::linear(BigInt(2 * f.params.k)));
  }
  const auto terms = leaf_terms(params);
  if (h.params.k == 0) return star_core_complete_stated(h.params.n, terms) * residual;
  return star_core_noncomplete(terms) * residual *
         char_poly(complement(hub).adjacency_matrix().scaled(2));
}

ClosedFormResult spec_uniform_star_join(std::size_t ell, std::size_t r0, std::size_t m,
                                        std::size_t n, std::size_t k,
                                        const std::vector<Spectrum>& leaf_spectra,
                                        const std::optional<Spectrum>& hub_spectrum) {
  ClosedFormResult r;
  r.id = cf::kUniformStarJoin;
  const bool hub_complete = r0 == 0;
  const bool leaves_complete = k == 0;
  const RegularFactorParams leaf{n, k}, hub{ell, r0};

  bool leaves_ok = leaf_spectra.size() == m && m >= 1 && n >= 1 && k < n;
  for (const auto& s : leaf_spectra) leaves_ok = leaves_ok && spectrum_matches("", leaf, s).holds;
  r.preconditions = {{"m >= 1", m >= 1}, {"complement of each leaf k-regular on n vertices", leaves_ok}};
  const bool hub_ok = hub_complete || (hub_spectrum && spectrum_matches("", hub, *hub_spectrum).holds);
  r.preconditions.push_back({"complement of hub r-regular on ell vertices", hub_ok && ell >= 1});
  if (m == 1) r.preconditions.push_back({"single leaf not complete", !leaves_complete});
  if (!leaves_ok || !hub_ok || ell == 0) return r;

  Spectrum residual;
  Inertia leaf_in;
  double leaf_energy = 0;
  for (const auto& s : leaf_spectra) {
    residual = residual + leaf_residual(leaf, s);
    leaf_in = add(leaf_in, inertia(s));
    leaf_energy += 2.0 * energy(s);
  }

  const double L = static_cast<double>(ell), M = static_cast<double>(m);
  const double N = static_cast<double>(n), K = static_cast<double>(k);
  const double b = K + N * (M - 1);
  const double c = 2 * (K - N);
  std::vector<double> v;
  push(v, c, m - 1);
  double rho = 0;
  if (hub_complete) {
    const double disc = std::sqrt(b * b + L * M * N);
    v.push_back(b + disc);
    v.push_back(b - disc);
    push(v, 0.0, ell - 1);
    rho = b + disc;
    r.spectrum = from_values(std::move(v)) + residual;
    if (leaves_complete) {
      r.inertia = Inertia{1, m * (n - 1) + ell - 1, m};
      r.energy = 2 * rho;
    } else {
      r.inertia = Inertia{leaf_in.positive + 1 - m, leaf_in.zero + ell - 1, leaf_in.negative + m};
      r.energy = leaf_energy + 2 * rho - 4 * K * M;
    }
    if (ell >= 2) {
      // lambda^2 - (2b + ell - 1) lambda + 2b(ell - 1) - ell m n, with the
      // hub block J - I contributing -1 with multiplicity ell - 1.
      const double lin = 2 * b + L - 1;
      const double con = (L - 1) * 2 * b - L * M * N;
      const double d = std::sqrt(lin * lin - 4 * con);
      std::vector<double> w;
      push(w, c, m - 1);
      w.push_back((lin + d) / 2);
      w.push_back((lin - d) / 2);
      push(w, -1.0, ell - 1);
      r.corrected_spectrum = from_values(std::move(w)) + residual;
      r.notes.push_back("stated form is exact only for a single hub vertex; "
                        "corrected spectrum replaces 0^(ell-1) by (-1)^(ell-1) and shifts the quadratic");
    }
  } else {
    v.push_back(2 * b);
    rho = 2 * b;
    const Spectrum hub2 = hub_spectrum->scaled(2.0);
    r.spectrum = from_values(std::move(v)) + residual + hub2;
    const Inertia hub_in = inertia(*hub_spectrum);
    if (leaves_complete) {
      r.inertia = Inertia{hub_in.positive + 1, hub_in.zero + m * (n - 1), hub_in.negative + m - 1};
      rho = 2 * N * (M - 1);
      r.energy = energy(hub2) + 2 * rho;
    } else {
      const Inertia all = add(hub_in, leaf_in);
      r.inertia = Inertia{all.positive + 1 - m, all.zero, all.negative + m - 1};
      r.energy = energy(hub2) + leaf_energy + 2 * rho - 4 * K * M;
    }
  }
  r.rho = rho;
  return r;
}

ClosedFormResult spec_clique_coalescence(std::size_t a, std::size_t b) {
  ClosedFormResult r;
  r.id = cf::kCliqueCoalescence;
  r.preconditions = {{"a >= 3", a >= 3}, {"b >= 3", b >= 3}};
  if (a < 3 || b < 3) return r;
  const double A = static_cast<double>(a), B = static_cast<double>(b);
  const double R = (4 * A * B - 3 * (A + B) + 2) / 3;
  const double theta = std::acos(2 * (A - 1) * (B - 1) / std::sqrt(R * R * R));
  const double s = 2 * std::sqrt(R);
  std::vector<double> v{s * std::cos(theta / 3), s * std::cos((theta + 2 * pi) / 3),
                        s * std::cos((theta + 4 * pi) / 3)};
  push(v, 0.0, a + b - 4);
  r.spectrum = from_values(std::move(v));
  r.rho = s * std::cos(theta / 3);
  r.energy = 2 * s * std::cos(theta / 3);
  const long long la = static_cast<long long>(a), lb = static_cast<long long>(b);
  r.exact_charpoly = IntPoly::monomial(a + b - 4) *
                     IntPoly{-4 * (la - 1) * (lb - 1), -(4 * la * lb - 3 * (la + lb) + 2), 0, 1};
  return r;
}

ClosedFormResult spec_k1_join_regular(const Graph& g) {
  ClosedFormResult r;
  r.id = cf::kK1JoinRegular;
  const auto deg = is_regular(g);
  r.preconditions = {{"G regular", deg.has_value()}, {"G not complete", !is_complete(g)}};
  if (!deg) return r;
  const double n = static_cast<double>(g.order()), d = static_cast<double>(*deg);
  const double c = n - d - 1;
  const Spectrum rest = adjacency_spectrum(g).without_one(d, 1e-6 * std::max(1.0, d));
  std::vector<double> v{c + std::sqrt(c * c + n), c - std::sqrt(c * c + n)};
  for (double x : rest.values()) v.push_back(-2 * (x + 1));
  r.spectrum = from_values(std::move(v));
  return r;
}

ClosedFormResult spec_wheel(std::size_t n) {
  ClosedFormResult r;
  r.id = cf::kWheel;
  r.preconditions = {{"n >= 4", n >= 4}};
  if (n < 3) return r;
  const double N = static_cast<double>(n), c = N - 3;
  std::vector<double> v{c + std::sqrt(c * c + N), c - std::sqrt(c * c + N)};
  for (std::size_t j = 1; j < n; ++j)
    v.push_back(-2 * (2 * std::cos(2 * pi * static_cast<double>(j) / N) + 1));
  r.spectrum = from_values(std::move(v));
  return r;
}

ClosedFormResult spec_s_n3(std::size_t n) {
  ClosedFormResult r;
  r.id = cf::kSn3;
  r.preconditions = {{"n >= 5", n >= 5}};
  if (n < 5) return r;
  const long long N = static_cast<long long>(n);
  const IntPoly quartic{0, 8 - 4 * N, 25 - 9 * N, 8 - 2 * N, 1};
  Spectrum s = spectrum_of_roots(IntPoly{8 - 4 * N, 25 - 9 * N, 8 - 2 * N, 1});
  s = s + Spectrum({{0.0, 1}});
  if (n > 4) s = s + Spectrum({{-2.0, n - 4}});
  r.spectrum = s;
  r.exact_charpoly = IntPoly{2, 1}.pow(n - 4) * quartic;
  r.stated_charpoly = IntPoly{-2, 1}.pow(n - 4) * quartic;
  r.rho = spectral_radius(s);
  r.notes.push_back("printed characteristic polynomial carries (lambda - 2)^(n-4); "
                    "the spectrum, and the exact polynomial, carry (lambda + 2)^(n-4)");
  return r;
}

ClosedFormResult spec_star(std::size_t m) {
  ClosedFormResult r;
  r.id = cf::kStar;
  r.preconditions = {{"m >= 1", m >= 1}};
  if (m == 0) return r;
  const double M = static_cast<double>(m);
  const double d = std::sqrt((M + 1) * (M + 1) - 3 * (M + 1) + 3);
  std::vector<double> v{(M - 1) + d, (M - 1) - d};
  push(v, -2.0, m - 1);
  r.spectrum = from_values(std::move(v));
  BigInt det = BigInt(m) * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(m - 1));
  r.determinant = m % 2 ? BigInt(-det) : det;
  return r;
}

ClosedFormResult spec_windmill(std::size_t n, std::size_t m) {
  ClosedFormResult r;
  r.id = cf::kWindmill;
  r.preconditions = {{"n >= 1", n >= 1}, {"m >= 2", m >= 2}};
  if (n == 0 || m == 0) return r;
  const double N = static_cast<double>(n), M = static_cast<double>(m);
  const double b = N * (M - 1);
  const double d = std::sqrt(b * b + M * N);
  std::vector<double> v{b + d, b - d};
  push(v, 0.0, m * (n - 1));
  push(v, -2 * N, m - 1);
  r.spectrum = from_values(std::move(v));
  r.rho = b + d;
  r.energy = 2 * (b + d);
  r.inertia = Inertia{1, m * (n - 1), m};
  return r;
}

ClosedFormResult spec_complete_corona(std::size_t k, std::size_t n) {
  ClosedFormResult r;
  r.id = cf::kCorona;
  r.preconditions = {{"k >= 2", k >= 2}, {"n >= 1", n >= 1}};
  if (k == 0 || n == 0) return r;
  const double K = static_cast<double>(k), N = static_cast<double>(n);
  const double s = std::sqrt(9 * N * N + 16 * N);
  std::vector<double> stated, fixed;
  push(stated, 0.0, k * (n - 1));
  push(fixed, 0.0, k * (n - 1));
  push(stated, (-3 * N + s) / 2, k - 1);
  push(stated, (-3 * N - s) / 2, k - 1);
  push(fixed, (-3 * N + s) / 2, k - 1);
  push(fixed, (-3 * N - s) / 2, k - 1);
  stated.push_back((K - 1) * (-3 * N + s) / 2);
  stated.push_back((K - 1) * (-3 * N - s) / 2);
  fixed.push_back((K - 1) * (3 * N + s) / 2);
  fixed.push_back((K - 1) * (3 * N - s) / 2);
  r.spectrum = from_values(std::move(stated));
  r.corrected_spectrum = from_values(std::move(fixed));
  r.notes.push_back("stated spectrum sums to -6n(k-1), not 0; "
                    "the corrected form flips the sign of 3n in the simple pair");
  return r;
}

}  // namespace eccspec
