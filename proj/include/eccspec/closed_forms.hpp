#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eccspec/graph.hpp"
#include "eccspec/polynomial.hpp"
#include "eccspec/spectral.hpp"

namespace eccspec {

// Order n of a factor and the degree k of its complement, i.e. the factor
// is (n - 1 - k)-regular. k = 0 means the factor is complete.
struct RegularFactorParams {
  std::size_t n = 1;
  std::size_t k = 0;
};

// A regular-complement factor together with Spec(A(complement)).
struct RegularFactor {
  RegularFactorParams params;
  Spectrum complement_spectrum;
};

// Throws std::invalid_argument if the complement of g is not regular.
RegularFactor regular_factor(const Graph& g);

struct Precondition {
  std::string name;
  bool holds = false;
};

// det(lambda I - M) = core(lambda) * prod_{mu in residual} (lambda - mu).
// The core carries the exact integer part contributed by the theorem; the
// residual collects factor eigenvalues known only numerically.
struct FactoredCharPoly {
  IntPoly core;
  Spectrum residual;

  std::size_t degree() const { return core.degree() + residual.order(); }
  long double evaluate(long double x) const;
  // |evaluate(x)| divided by the same product taken over absolute values
  // (each residual factor at least 1), so that 0 means an exact root and 1
  // means no cancellation at all.
  long double scaled_magnitude(long double x) const;
  // Real roots of the core together with the residual. Throws
  // std::domain_error if the core is not real-rooted.
  Spectrum roots() const;
};

struct ClosedFormResult {
  std::string id;
  // Exactly one of these is set.
  std::optional<Spectrum> spectrum;
  std::optional<FactoredCharPoly> charpoly;

  std::vector<Precondition> preconditions;

  // Scalars the theorem states alongside its spectrum.
  std::optional<Inertia> inertia;
  std::optional<double> rho;
  std::optional<double> energy;
  std::optional<BigInt> determinant;
  // The closed form as an exact integer polynomial, when the statement gives one.
  std::optional<IntPoly> exact_charpoly;

  // Where the statement is known to be defective: the form that matches the
  // definitional oracle, and the literal statement for comparison.
  std::optional<Spectrum> corrected_spectrum;
  std::optional<FactoredCharPoly> corrected_charpoly;
  std::optional<IntPoly> stated_charpoly;
  std::vector<std::string> notes;

  bool supported() const;
  // spectrum, or the roots of charpoly.
  Spectrum predicted_spectrum() const;
};

// Stable identifiers.
namespace cf {
inline constexpr const char* kCycle = "lem-cycle";
inline constexpr const char* kRad3Quotient = "cor-2.3-rad3-quotient";
inline constexpr const char* kLexRad3 = "thm-lex-rad3";
inline constexpr const char* kLexCycle = "cor-lex-cycle";
inline constexpr const char* kCompleteHostJoin = "thm-complete-host-join";
inline constexpr const char* kCompleteMultipartite = "cor-complete-multipartite";
inline constexpr const char* kRad2Complete = "thm-rad2-complete-quotient";
inline constexpr const char* kLexComplete = "cor-h-km";
inline constexpr const char* kP4Join = "thm-p4-join";
inline constexpr const char* kDoubleStar = "cor-double-star";
inline constexpr const char* kBarbell = "cor-barbell";
inline constexpr const char* kStarJoinHubComplete = "thm-star-join-hub-complete";
inline constexpr const char* kStarJoinHubNoncomplete = "thm-star-join-hub-noncomplete";
inline constexpr const char* kUniformStarJoin = "thm-uniform-star-join";
inline constexpr const char* kCliqueCoalescence = "cor-clique-coalescence";
inline constexpr const char* kK1JoinRegular = "cor-k1-join-regular";
inline constexpr const char* kWheel = "cor-wheel";
inline constexpr const char* kSn3 = "cor-s-n3";
inline constexpr const char* kStar = "cor-star";
inline constexpr const char* kWindmill = "cor-windmill";
inline constexpr const char* kCorona = "thm-corona";
}  // namespace cf

std::vector<std::string> closed_form_ids();

// Spec(eps(C_n)): {t^t, (-t)^t} for n = 2t, {2t cos(2 pi j / n)} for n = 2t + 1.
ClosedFormResult spec_cycle(std::size_t n);

// rad(H) >= 3: Spec = Spec(Q) + {0^(n-k)}, q_ij = a_ij n_j; inertia of eps(H)
// with n - k extra zeros.
ClosedFormResult spec_hjoin_rad3(const Graph& h, const std::vector<std::size_t>& sizes);

// rad(H) >= 3, all factors of order m: {0^(k(m-1))} + m Spec(eps(H)).
ClosedFormResult spec_lex_rad3(const Graph& h, std::size_t m);

// C_n[G_1..G_n], n >= 6, all factors of order m.
ClosedFormResult spec_lex_cycle(std::size_t n, std::size_t m);

// K_k[G_1..G_k] with Delta(G_i) <= n_i - 2: union of Spec(2A(complement G_i)).
ClosedFormResult spec_complete_host_join(const std::vector<Graph>& factors);

// K_{n_1..n_k}, n_i >= 2: {(-2)^(n-k)} + {2(n_i - 1)}.
ClosedFormResult spec_complete_multipartite(const std::vector<std::size_t>& sizes);

// rad(H) >= 2 and G_i complete whenever e_H(i) = 2.
ClosedFormResult spec_hjoin_rad2_complete(const Graph& h, const std::vector<std::size_t>& sizes,
                                          const std::vector<bool>& complete_flags);

// H[K_m], rad(H) >= 2: {0^(k(m-1))} + m Spec(eps(H)).
ClosedFormResult spec_lex_complete(const Graph& h, std::size_t m);

// P4[G_1, K_1, K_1, G_4] with |G_1| = n1, |G_4| = n4.
ClosedFormResult spec_p4_join(std::size_t n1, std::size_t n4);
// lambda^(n-4) (lambda^4 - alpha lambda^2 + 16 n1 n4).
IntPoly p4_join_charpoly(std::size_t n1, std::size_t n4);
ClosedFormResult spec_double_star(std::size_t a, std::size_t b);
ClosedFormResult spec_barbell(std::size_t n);

// Characteristic polynomial of eps(K_{1,m}[G_0, ..., G_m]) where every
// complement is regular. leaf_spectra[i] = Spec(A(complement G_i)); the hub
// spectrum is needed only when G_0 is not complete.
ClosedFormResult charpoly_star_join(const RegularFactorParams& hub,
                                    const std::vector<RegularFactorParams>& leaves,
                                    const std::vector<Spectrum>& leaf_spectra,
                                    const std::optional<Spectrum>& hub_spectrum = std::nullopt);
ClosedFormResult charpoly_star_join(const Graph& hub, const std::vector<Graph>& leaves);

// The stated characteristic polynomial with every factor polynomial computed
// exactly: phi(lambda, 2A(complement G_i)) is divided by (lambda - 2k_i) in
// integer arithmetic.
IntPoly star_join_charpoly_exact(const Graph& hub, const std::vector<Graph>& leaves);

// K_{1,m}[G_0, G_1..G_m] with complement G_0 r-regular on ell vertices and
// every complement G_i k-regular on n vertices.
ClosedFormResult spec_uniform_star_join(std::size_t ell, std::size_t r, std::size_t m,
                                        std::size_t n, std::size_t k,
                                        const std::vector<Spectrum>& leaf_spectra,
                                        const std::optional<Spectrum>& hub_spectrum = std::nullopt);

// K_a * K_b (two cliques sharing a vertex), a, b >= 3, via the trigonometric
// roots of lambda^3 - 3R lambda - 4(a-1)(b-1).
ClosedFormResult spec_clique_coalescence(std::size_t a, std::size_t b);

// K_1 v G for r-regular non-complete G.
ClosedFormResult spec_k1_join_regular(const Graph& g);
// W_{n+1} = K_1 v C_n, n >= 4.
ClosedFormResult spec_wheel(std::size_t n);
// S_{n,3}, n >= 5.
ClosedFormResult spec_s_n3(std::size_t n);
// K_{1,m}.
ClosedFormResult spec_star(std::size_t m);
// W_{n+1}^{(m)}.
ClosedFormResult spec_windmill(std::size_t n, std::size_t m);

// K_k with a factor of order n attached to every host vertex. The statement's
// spectrum is returned as `spectrum`; it fails the zero-trace test and the
// form that matches the oracle is returned as `corrected_spectrum`.
ClosedFormResult spec_complete_corona(std::size_t k, std::size_t n);

}  // namespace eccspec
