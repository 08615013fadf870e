#include "eccspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "eccspec/ecc_matrix.hpp"
#include "eccspec/expression.hpp"
#include "eccspec/families.hpp"

namespace eccspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return kInf;
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

bool same_multiplicities(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  const double tol = std::max(default_group_tol(a), default_group_tol(b));
  const Spectrum ga = group_spectrum(a, tol), gb = group_spectrum(b, tol);
  if (ga.groups().size() != gb.groups().size()) return false;
  for (std::size_t i = 0; i < ga.groups().size(); ++i)
    if (ga.groups()[i].mult != gb.groups()[i].mult) return false;
  return true;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

Check near(std::string name, double claimed, double actual, double tol) {
  const bool ok = std::fabs(claimed - actual) <= tol;
  return {std::move(name), ok, "claimed " + fmt(claimed) + ", oracle " + fmt(actual)};
}

std::string inertia_text(const Inertia& in) {
  return "(" + std::to_string(in.positive) + ", " + std::to_string(in.zero) + ", " +
         std::to_string(in.negative) + ")";
}

// Bias from the modulus is irrelevant at these range widths; raw engine
// output keeps the draws identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return static_cast<std::size_t>(lo + static_cast<std::int64_t>(gen_() % span));
  }
  bool coin() { return (gen_() >> 63) != 0; }

 private:
  std::mt19937_64 gen_;
};

Graph random_graph(Rng& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.coin()) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph random_noncomplete(Rng& rng, std::size_t n) {
  for (;;) {
    Graph g = random_graph(rng, n);
    if (max_degree(g) + 2 <= n) return g;
  }
}

struct Case {
  std::string params;
  std::string expr;
  std::function<ClosedFormResult()> closed;
  std::function<void(const ClosedFormResult&, const Graph&, VerificationReport&)> extra;
  bool expected = true;
};

std::string joined(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string sizes_text(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out;
}

std::vector<std::string> expressions(const std::vector<Graph>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(to_expression(g));
  return out;
}

class Context {
 public:
  Context(const TheoremInfo& info, const SweepOptions& opt) : info_(info), opt_(opt), rng_(opt.seed) {
    for (const auto& [name, r] : opt.ranges) {
      const bool known = std::any_of(info.params.begin(), info.params.end(),
                                     [&](const auto& p) { return p.first == name; });
      if (!known) throw std::invalid_argument("theorem " + info.id + " has no parameter '" + name + "'");
      if (r.lo > r.hi || r.lo < 0) throw std::invalid_argument("empty or negative range for '" + name + "'");
    }
    if (!opt.hosts.empty() && info.default_hosts.empty())
      throw std::invalid_argument("theorem " + info.id + " does not take host graphs");
  }

  Range range(const std::string& name) const {
    if (auto it = opt_.ranges.find(name); it != opt_.ranges.end()) return it->second;
    for (const auto& [n, r] : info_.params)
      if (n == name) return r;
    throw std::logic_error("undeclared parameter " + name);
  }

  std::vector<std::size_t> values(const std::string& name) const {
    const Range r = range(name);
    std::vector<std::size_t> out;
    for (std::int64_t v = r.lo; v <= r.hi; ++v) out.push_back(static_cast<std::size_t>(v));
    return out;
  }

  std::size_t draw(const std::string& name) {
    const Range r = range(name);
    return rng_.uniform(r.lo, r.hi);
  }

  const std::vector<std::string>& hosts() const {
    return opt_.hosts.empty() ? info_.default_hosts : opt_.hosts;
  }
  std::size_t samples() const { return opt_.samples ? opt_.samples : info_.default_samples; }
  Rng& rng() { return rng_; }

 private:
  const TheoremInfo& info_;
  const SweepOptions& opt_;
  Rng rng_;
};

// Factors whose complement is regular, as expressions.
const std::vector<std::string>& complete_pool() {
  static const std::vector<std::string> pool{"K1", "K2", "K3", "K4"};
  return pool;
}

const std::vector<std::string>& regular_noncomplete_pool() {
  static const std::vector<std::string> pool{
      "Kbar2", "Kbar3", "Kbar4", "C4", "C5", "C6", "K 2 2 2", "K 3 3", "union(K2, K2)", "union(K3, K3)"};
  return pool;
}

const std::string& pick(Rng& rng, const std::vector<std::string>& pool) {
  return pool[rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1)];
}

std::string star_join_expr(std::size_t m, const std::string& hub, const std::vector<std::string>& leaves) {
  return "hjoin(Star " + std::to_string(m) + "; " + hub + ", " + joined(leaves) + ")";
}

std::vector<Graph> parse_all(const std::vector<std::string>& exprs) {
  std::vector<Graph> out;
  for (const auto& e : exprs) out.push_back(parse_graph_expression(e));
  return out;
}

void exact_star_join_check(const ClosedFormResult&, const Graph& hub, const std::vector<Graph>& leaves,
                           const Graph& g, VerificationReport& rep) {
  const bool ok = star_join_charpoly_exact(hub, leaves) == char_poly(ecc_matrix(g).entries());
  rep.checks.push_back({"charpoly-exact", ok, ok ? "" : "assembled polynomial differs from the oracle"});
}

Case star_join_case(const std::string& hub_expr, const std::vector<std::string>& leaf_exprs) {
  const std::size_t m = leaf_exprs.size();
  Case c;
  c.params = "hub=" + hub_expr + " leaves=" + joined(leaf_exprs, ";");
  c.expr = star_join_expr(m, hub_expr, leaf_exprs);
  const Graph hub = parse_graph_expression(hub_expr);
  const std::vector<Graph> leaves = parse_all(leaf_exprs);
  c.expected = !(is_complete(hub) && hub.order() >= 2);
  c.closed = [hub, leaves] { return charpoly_star_join(hub, leaves); };
  c.extra = [hub, leaves](const ClosedFormResult& cf, const Graph& g, VerificationReport& rep) {
    exact_star_join_check(cf, hub, leaves, g, rep);
  };
  return c;
}

Case uniform_case(const std::string& hub_expr, const std::string& leaf_expr, std::size_t m) {
  Case c;
  c.params = "hub=" + hub_expr + " leaf=" + leaf_expr + " m=" + std::to_string(m);
  c.expr = star_join_expr(m, hub_expr, std::vector<std::string>(m, leaf_expr));
  const RegularFactor hub = regular_factor(parse_graph_expression(hub_expr));
  const RegularFactor leaf = regular_factor(parse_graph_expression(leaf_expr));
  c.expected = !(hub.params.k == 0 && hub.params.n >= 2);
  c.closed = [hub, leaf, m] {
    return spec_uniform_star_join(hub.params.n, hub.params.k, m, leaf.params.n, leaf.params.k,
                                  std::vector<Spectrum>(m, leaf.complement_spectrum),
                                  hub.params.k ? std::optional<Spectrum>(hub.complement_spectrum)
                                               : std::nullopt);
  };
  return c;
}

void add_energy_is_twice_rho(const ClosedFormResult& cf, const Graph&, VerificationReport& rep) {
  if (cf.energy && cf.rho)
    rep.checks.push_back(near("energy-equals-twice-rho", *cf.energy, 2 * *cf.rho, 1e-12 * *cf.energy));
}

using Builder = std::function<std::vector<Case>(Context&)>;

std::vector<Case> build_cycle(Context& ctx) {
  std::vector<Case> out;
  for (auto n : ctx.values("n"))
    out.push_back({"n=" + std::to_string(n), "C" + std::to_string(n), [n] { return spec_cycle(n); }, {}, true});
  return out;
}

std::vector<Case> build_rad3(Context& ctx) {
  std::vector<Case> out;
  for (const auto& host : ctx.hosts()) {
    const Graph h = parse_graph_expression(host);
    for (std::size_t s = 0; s < ctx.samples(); ++s) {
      std::vector<std::size_t> sizes;
      std::vector<Graph> factors;
      for (std::size_t i = 0; i < h.order(); ++i) {
        sizes.push_back(ctx.draw("size"));
        factors.push_back(random_graph(ctx.rng(), sizes.back()));
      }
      out.push_back({"host=" + host + " sizes=" + sizes_text(sizes),
                     "hjoin(" + host + "; " + joined(expressions(factors)) + ")",
                     [h, sizes] { return spec_hjoin_rad3(h, sizes); }, {}, true});
    }
  }
  return out;
}

std::vector<Case> build_lex_rad3(Context& ctx) {
  std::vector<Case> out;
  for (const auto& host : ctx.hosts()) {
    const Graph h = parse_graph_expression(host);
    for (auto m : ctx.values("m")) {
      std::vector<Graph> factors;
      for (std::size_t i = 0; i < h.order(); ++i) factors.push_back(random_graph(ctx.rng(), m));
      out.push_back({"host=" + host + " m=" + std::to_string(m),
                     "hjoin(" + host + "; " + joined(expressions(factors)) + ")",
                     [h, m] { return spec_lex_rad3(h, m); }, {}, true});
    }
  }
  return out;
}

std::vector<Case> build_lex_cycle(Context& ctx) {
  std::vector<Case> out;
  for (auto n : ctx.values("n"))
    for (auto m : ctx.values("m")) {
      std::vector<Graph> factors;
      for (std::size_t i = 0; i < n; ++i) factors.push_back(random_graph(ctx.rng(), m));
      out.push_back({"n=" + std::to_string(n) + " m=" + std::to_string(m),
                     "hjoin(C" + std::to_string(n) + "; " + joined(expressions(factors)) + ")",
                     [n, m] { return spec_lex_cycle(n, m); }, {}, true});
    }
  return out;
}

std::vector<Case> build_complete_host(Context& ctx) {
  std::vector<Case> out;
  for (auto k : ctx.values("k"))
    for (std::size_t s = 0; s < ctx.samples(); ++s) {
      std::vector<Graph> factors;
      std::vector<std::size_t> sizes;
      for (std::size_t i = 0; i < k; ++i) {
        sizes.push_back(std::max<std::size_t>(2, ctx.draw("size")));
        factors.push_back(random_noncomplete(ctx.rng(), sizes.back()));
      }
      out.push_back({"k=" + std::to_string(k) + " sizes=" + sizes_text(sizes),
                     "hjoin(K" + std::to_string(k) + "; " + joined(expressions(factors)) + ")",
                     [factors] { return spec_complete_host_join(factors); }, {}, true});
    }
  return out;
}

void partitions(std::size_t k, std::size_t lo, std::size_t hi, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = cur.empty() ? lo : cur.back(); v <= hi; ++v) {
    cur.push_back(v);
    partitions(k, lo, hi, cur, out);
    cur.pop_back();
  }
}

std::vector<Case> build_multipartite(Context& ctx) {
  std::vector<Case> out;
  const Range part = ctx.range("part");
  for (auto k : ctx.values("k")) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> cur;
    partitions(k, static_cast<std::size_t>(part.lo), static_cast<std::size_t>(part.hi), cur, all);
    for (const auto& sizes : all) {
      std::string expr = "K";
      for (auto s : sizes) expr += " " + std::to_string(s);
      out.push_back({"sizes=" + sizes_text(sizes), expr,
                     [sizes] { return spec_complete_multipartite(sizes); }, {}, true});
    }
  }
  return out;
}

Case rad2_case(const std::string& host, const Graph& h, const std::vector<std::size_t>& sizes,
               const std::vector<Graph>& factors) {
  std::vector<bool> flags;
  for (const auto& f : factors) flags.push_back(is_complete(f));
  return {"host=" + host + " sizes=" + sizes_text(sizes),
          "hjoin(" + host + "; " + joined(expressions(factors)) + ")",
          [h, sizes, flags] { return spec_hjoin_rad2_complete(h, sizes, flags); }, {}, true};
}

std::vector<Case> build_rad2(Context& ctx) {
  std::vector<Case> out;
  for (const auto& host : ctx.hosts()) {
    const Graph h = parse_graph_expression(host);
    const MetricProfile mp = metric_profile(h);
    for (std::size_t s = 0; s < ctx.samples(); ++s) {
      std::vector<std::size_t> sizes;
      std::vector<Graph> factors;
      for (std::size_t i = 0; i < h.order(); ++i) {
        sizes.push_back(ctx.draw("size"));
        factors.push_back(mp.ecc[i] == 2 ? complete(sizes.back()) : random_graph(ctx.rng(), sizes.back()));
      }
      out.push_back(rad2_case(host, h, sizes, factors));
    }
  }
  // P4 with sizes (a, 1, 1, b) is the P4-join; both closed forms must agree.
  const Graph p4 = parse_graph_expression("P4");
  for (auto a : ctx.values("size"))
    for (auto b : ctx.values("size")) {
      const std::vector<std::size_t> sizes{a, 1, 1, b};
      const std::vector<Graph> factors{empty(a), complete(1), complete(1), empty(b)};
      Case c = rad2_case("P4", p4, sizes, factors);
      c.extra = [a, b](const ClosedFormResult& cf, const Graph&, VerificationReport& rep) {
        const auto mine = cf.spectrum->values(), theirs = spec_p4_join(a, b).spectrum->values();
        const double d = max_deviation(mine, theirs);
        rep.checks.push_back({"agrees-with-p4-join", d <= 1e-9, "deviation " + fmt(d)});
      };
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<Case> build_lex_complete(Context& ctx) {
  std::vector<Case> out;
  for (const auto& host : ctx.hosts()) {
    const Graph h = parse_graph_expression(host);
    for (auto m : ctx.values("m"))
      out.push_back({"host=" + host + " m=" + std::to_string(m),
                     "lex(" + host + ", K" + std::to_string(m) + ")",
                     [h, m] { return spec_lex_complete(h, m); }, {}, true});
  }
  return out;
}

std::vector<Case> build_p4(Context& ctx) {
  std::vector<Case> out;
  for (auto n1 : ctx.values("n1"))
    for (auto n4 : ctx.values("n4")) {
      const Graph g1 = random_graph(ctx.rng(), n1), g4 = random_graph(ctx.rng(), n4);
      Case c{"n1=" + std::to_string(n1) + " n4=" + std::to_string(n4),
             "hjoin(P4; " + to_expression(g1) + ", K1, K1, " + to_expression(g4) + ")",
             [n1, n4] { return spec_p4_join(n1, n4); }, {}, true};
      c.extra = [](const ClosedFormResult& cf, const Graph&, VerificationReport& rep) {
        const double own = energy(*cf.spectrum);
        rep.checks.push_back(near("energy-self-consistent", *cf.energy, own, 1e-10 * std::max(1.0, own)));
      };
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<Case> build_double_star(Context& ctx) {
  std::vector<Case> out;
  for (auto a : ctx.values("a"))
    for (auto b : ctx.values("b"))
      out.push_back({"a=" + std::to_string(a) + " b=" + std::to_string(b),
                     "S " + std::to_string(a) + " " + std::to_string(b),
                     [a, b] { return spec_double_star(a, b); }, {}, true});
  return out;
}

std::vector<Case> build_barbell(Context& ctx) {
  std::vector<Case> out;
  for (auto n : ctx.values("n"))
    out.push_back({"n=" + std::to_string(n), "B " + std::to_string(n), [n] { return spec_barbell(n); }, {}, true});
  return out;
}

std::string kbar_or_k1(std::size_t n) { return n == 1 ? "K1" : "Kbar" + std::to_string(n); }

std::vector<Case> build_star_join_complete(Context& ctx) {
  std::vector<Case> out;
  for (auto n : ctx.values("wheel")) out.push_back(star_join_case("K1", {"C" + std::to_string(n)}));
  for (auto n : ctx.values("windmill_n"))
    for (auto m : ctx.values("windmill_m"))
      out.push_back(star_join_case("K1", std::vector<std::string>(m, "K" + std::to_string(n))));
  for (auto n : ctx.values("sn3")) out.push_back(star_join_case("K1", {"K2", kbar_or_k1(n - 3)}));
  for (auto a : ctx.values("clique"))
    for (auto b : ctx.values("clique"))
      if (a <= b)
        out.push_back(star_join_case("K1", {"K" + std::to_string(a - 1), "K" + std::to_string(b - 1)}));
  std::vector<std::string> pool = complete_pool();
  const auto& rest = regular_noncomplete_pool();
  pool.insert(pool.end(), rest.begin(), rest.end());
  for (std::size_t s = 0; s < ctx.samples(); ++s) {
    const std::size_t ell = ctx.draw("ell"), m = ctx.draw("m");
    std::vector<std::string> leaves;
    for (std::size_t i = 0; i < m; ++i) leaves.push_back(pick(ctx.rng(), m == 1 ? rest : pool));
    out.push_back(star_join_case("K" + std::to_string(ell), leaves));
  }
  return out;
}

std::vector<Case> build_star_join_noncomplete(Context& ctx) {
  std::vector<Case> out;
  out.push_back(star_join_case("C4", {"K2", "K2"}));
  out.push_back(star_join_case("Kbar2", {"C4", "Kbar3", "K1"}));
  std::vector<std::string> pool = complete_pool();
  const auto& rest = regular_noncomplete_pool();
  pool.insert(pool.end(), rest.begin(), rest.end());
  for (std::size_t s = 0; s < ctx.samples(); ++s) {
    const std::string hub = pick(ctx.rng(), rest);
    const std::size_t m = ctx.draw("m");
    std::vector<std::string> leaves;
    for (std::size_t i = 0; i < m; ++i) leaves.push_back(pick(ctx.rng(), m == 1 ? rest : pool));
    out.push_back(star_join_case(hub, leaves));
  }
  return out;
}

std::vector<Case> build_uniform(Context& ctx) {
  std::vector<Case> out;
  for (auto n : ctx.values("windmill_n"))
    for (auto m : ctx.values("windmill_m")) {
      Case c = uniform_case("K1", "K" + std::to_string(n), m);
      c.extra = add_energy_is_twice_rho;
      out.push_back(std::move(c));
    }
  for (auto m : ctx.values("star_m")) out.push_back(uniform_case("K1", "K1", m));
  std::vector<std::string> pool = complete_pool();
  const auto& rest = regular_noncomplete_pool();
  pool.insert(pool.end(), rest.begin(), rest.end());
  for (std::size_t s = 0; s < ctx.samples(); ++s) {
    const bool hub_complete = ctx.rng().coin();
    const std::size_t ell = ctx.draw("ell");
    const std::string hub = hub_complete ? "K" + std::to_string(ell) : pick(ctx.rng(), rest);
    const std::size_t m = ctx.draw("m");
    const std::string leaf = pick(ctx.rng(), m == 1 ? rest : pool);
    out.push_back(uniform_case(hub, leaf, m));
  }
  return out;
}

std::vector<Case> build_clique_coalescence(Context& ctx) {
  std::vector<Case> out;
  for (auto a : ctx.values("a"))
    for (auto b : ctx.values("b"))
      out.push_back({"a=" + std::to_string(a) + " b=" + std::to_string(b),
                     "coalesce(K" + std::to_string(a) + "@0, K" + std::to_string(b) + "@0)",
                     [a, b] { return spec_clique_coalescence(a, b); }, add_energy_is_twice_rho, true});
  return out;
}

std::vector<Case> build_k1_join(Context& ctx) {
  std::vector<Case> out;
  for (const auto& host : ctx.hosts()) {
    const Graph g = parse_graph_expression(host);
    out.push_back({"G=" + host, "join(K1, " + host + ")", [g] { return spec_k1_join_regular(g); }, {}, true});
  }
  return out;
}

std::vector<Case> build_wheel(Context& ctx) {
  std::vector<Case> out;
  for (auto n : ctx.values("n"))
    out.push_back({"n=" + std::to_string(n), "Wheel " + std::to_string(n), [n] { return spec_wheel(n); }, {}, true});
  return out;
}

std::vector<Case> build_s_n3(Context& ctx) {
  std::vector<Case> out;
  for (auto n : ctx.values("n")) {
    Case c{"n=" + std::to_string(n), "Sn3 " + std::to_string(n), [n] { return spec_s_n3(n); }, {}, true};
    c.extra = [](const ClosedFormResult&, const Graph&, VerificationReport& rep) {
      const double xi = least_eigenvalue(rep.oracle);
      rep.checks.push_back({"least-eigenvalue-in-(-4,-3)", xi > -4 && xi < -3, "oracle " + fmt(xi)});
    };
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Case> build_star(Context& ctx) {
  std::vector<Case> out;
  for (auto m : ctx.values("m")) {
    Case c{"m=" + std::to_string(m), "Star " + std::to_string(m), [m] { return spec_star(m); }, {}, true};
    if (m >= 2)
      c.extra = [](const ClosedFormResult&, const Graph&, VerificationReport& rep) {
        rep.checks.push_back(near("least-eigenvalue", -2.0, least_eigenvalue(rep.oracle), 1e-8));
      };
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Case> build_windmill(Context& ctx) {
  std::vector<Case> out;
  for (auto n : ctx.values("n"))
    for (auto m : ctx.values("m"))
      out.push_back({"n=" + std::to_string(n) + " m=" + std::to_string(m),
                     "Windmill " + std::to_string(n) + " " + std::to_string(m),
                     [n, m] { return spec_windmill(n, m); }, add_energy_is_twice_rho, true});
  return out;
}

std::vector<Case> build_corona(Context& ctx) {
  std::vector<Case> out;
  for (auto k : ctx.values("k"))
    for (auto n : ctx.values("n")) {
      std::vector<Graph> factors;
      for (std::size_t i = 0; i < k; ++i) factors.push_back(random_graph(ctx.rng(), n));
      out.push_back({"k=" + std::to_string(k) + " n=" + std::to_string(n),
                     "corona(K" + std::to_string(k) + "; " + joined(expressions(factors)) + ")",
                     [k, n] { return spec_complete_corona(k, n); }, {}, false});
    }
  return out;
}

struct Entry {
  TheoremInfo info;
  Builder build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    const std::vector<std::string> rad3_hosts{"C6", "C7", "P7"};
    const std::vector<std::string> rad2_hosts{"P4", "C4", "C5", "P5", "C6", "Petersen"};
    const std::vector<std::string> regular_graphs{"Kbar2", "Kbar3", "Kbar5", "C4", "C5", "C6",
                                                  "C7",    "C8",    "K 3 3", "K 2 2 2", "Petersen"};
    std::vector<Entry> t;
    auto add = [&](std::string id, std::string summary, std::vector<std::pair<std::string, Range>> params,
                   Builder b, std::vector<std::string> hosts = {}, std::size_t samples = 0) {
      t.push_back({{std::move(id), std::move(summary), std::move(params), std::move(hosts), samples}, std::move(b)});
    };
    add(cf::kCycle, "eccentricity spectrum of C_n", {{"n", {3, 17}}}, build_cycle);
    add(cf::kRad3Quotient, "H-join with rad(H) >= 3 via the quotient matrix", {{"size", {1, 4}}}, build_rad3,
        rad3_hosts, 5);
    add(cf::kLexRad3, "H[G] with rad(H) >= 3 via eps(H) (x) J", {{"m", {1, 3}}}, build_lex_rad3,
        {"C6", "C7", "C8", "P7"});
    add(cf::kLexCycle, "C_n[G_1..G_n] with equal factor orders", {{"n", {6, 9}}, {"m", {1, 3}}},
        build_lex_cycle);
    add(cf::kCompleteHostJoin, "K_k-join of non-complete factors", {{"k", {2, 4}}, {"size", {2, 5}}},
        build_complete_host, {}, 6);
    add(cf::kCompleteMultipartite, "complete multipartite graphs", {{"k", {2, 4}}, {"part", {2, 4}}},
        build_multipartite);
    add(cf::kRad2Complete, "H-join with rad(H) >= 2, complete factors on eccentricity-2 vertices",
        {{"size", {1, 3}}}, build_rad2, rad2_hosts, 4);
    add(cf::kLexComplete, "H[K_m] with rad(H) >= 2", {{"m", {1, 3}}}, build_lex_complete, rad2_hosts);
    add(cf::kP4Join, "P4[G_1, K1, K1, G_4]", {{"n1", {1, 5}}, {"n4", {1, 5}}}, build_p4);
    add(cf::kDoubleStar, "double star S_{a,b}", {{"a", {1, 5}}, {"b", {1, 5}}}, build_double_star);
    add(cf::kBarbell, "barbell B_{n,n}", {{"n", {2, 6}}}, build_barbell);
    add(cf::kStarJoinHubComplete, "characteristic polynomial of K_{1,m}[K_l, G_1..G_m]",
        {{"wheel", {4, 8}},
         {"windmill_n", {2, 4}},
         {"windmill_m", {2, 4}},
         {"sn3", {5, 8}},
         {"clique", {3, 6}},
         {"ell", {1, 1}},
         {"m", {1, 3}}},
        build_star_join_complete, {}, 12);
    add(cf::kStarJoinHubNoncomplete, "characteristic polynomial of K_{1,m}[G_0, G_1..G_m], G_0 not complete",
        {{"m", {1, 3}}}, build_star_join_noncomplete, {}, 12);
    add(cf::kUniformStarJoin, "K_{1,m}[G_0, G, ..., G] with regular complements",
        {{"windmill_n", {2, 4}}, {"windmill_m", {2, 4}}, {"star_m", {2, 6}}, {"ell", {1, 1}}, {"m", {1, 4}}},
        build_uniform, {}, 12);
    add(cf::kCliqueCoalescence, "K_a * K_b", {{"a", {3, 6}}, {"b", {3, 6}}}, build_clique_coalescence);
    add(cf::kK1JoinRegular, "K1 v G for regular non-complete G", {}, build_k1_join, regular_graphs);
    add(cf::kWheel, "wheel W_{n+1}", {{"n", {4, 8}}}, build_wheel);
    add(cf::kSn3, "S_{n,3}", {{"n", {5, 8}}}, build_s_n3);
    add(cf::kStar, "star K_{1,m}", {{"m", {1, 6}}}, build_star);
    add(cf::kWindmill, "windmill W_{n+1}^{(m)}", {{"n", {2, 4}}, {"m", {2, 4}}}, build_windmill);
    add(cf::kCorona, "generalized corona of K_k", {{"k", {2, 4}}, {"n", {1, 3}}}, build_corona);
    return t;
  }();
  return table;
}

const Entry& entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::unsupported: return "unsupported";
  }
  return "unsupported";
}

bool VerificationReport::checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerificationReport verify_case(const ClosedFormResult& cf, const Graph& g, double tol) {
  VerificationReport rep;
  rep.theorem = cf.id;
  for (const auto& p : cf.preconditions)
    if (!p.holds) rep.failed_preconditions.push_back(p.name);
  rep.notes = cf.notes;

  const EccMatrix e = ecc_matrix(g);
  rep.oracle = ecc_spectrum(e);
  const std::vector<double> oracle = rep.oracle.values();
  const double n = static_cast<double>(oracle.size());

  bool real = true;
  try {
    rep.closed_form = cf.predicted_spectrum();
  } catch (const std::domain_error&) {
    real = false;
    rep.notes.push_back("closed-form polynomial is not real-rooted");
  }
  if (real) {
    const std::vector<double> mine = rep.closed_form.values();
    rep.deviation = max_deviation(mine, oracle);
    rep.multiplicities_agree = same_multiplicities(mine, oracle);
    rep.trace = rep.closed_form.sum();
  } else {
    rep.deviation = kInf;
    if (cf.charpoly) {
      const IntPoly& core = cf.charpoly->core;
      rep.trace = cf.charpoly->residual.sum();
      if (core.degree() >= 1)
        rep.trace -= core.coeff(core.degree() - 1).convert_to<double>() / core.leading().convert_to<double>();
    }
  }
  rep.trace_ok = std::fabs(rep.trace) <= tol * std::max(1.0, n);

  std::optional<Spectrum> corrected = cf.corrected_spectrum;
  if (!corrected && cf.corrected_charpoly) {
    try {
      corrected = cf.corrected_charpoly->roots();
    } catch (const std::domain_error&) {
      rep.corrected_deviation = kInf;
    }
  }
  if (corrected) {
    const std::vector<double> fixed = corrected->values();
    rep.corrected_deviation = max_deviation(fixed, oracle);
    rep.corrected_match = *rep.corrected_deviation <= tol && same_multiplicities(fixed, oracle);
  }

  const bool matched = rep.deviation <= tol && rep.multiplicities_agree;
  if (!cf.supported())
    rep.verdict = Verdict::unsupported;
  else
    rep.verdict = matched ? Verdict::match : Verdict::mismatch;
  if (rep.verdict == Verdict::mismatch)
    rep.diagnosis = (!rep.trace_ok || rep.corrected_match) ? "formula-defect" : "implementation-suspect";

  if (cf.charpoly) {
    long double worst = 0;
    for (double x : oracle) worst = std::max(worst, cf.charpoly->scaled_magnitude(x));
    rep.checks.push_back({"charpoly-residual", worst <= 1e-6L,
                          "max scaled |phi| " + fmt(static_cast<double>(worst))});
  }
  if (cf.corrected_charpoly) {
    long double worst = 0;
    for (double x : oracle) worst = std::max(worst, cf.corrected_charpoly->scaled_magnitude(x));
    rep.checks.push_back({"corrected-charpoly-residual", worst <= 1e-6L,
                          "max scaled |phi| " + fmt(static_cast<double>(worst))});
  }
  std::optional<IntPoly> exact;
  auto oracle_poly = [&]() -> const IntPoly& {
    if (!exact) exact = char_poly(e.entries());
    return *exact;
  };
  if (cf.exact_charpoly) {
    const bool ok = *cf.exact_charpoly == oracle_poly();
    rep.checks.push_back({"charpoly-exact", ok, ok ? "" : "oracle " + oracle_poly().to_string("x")});
  }
  if (cf.stated_charpoly)
    rep.notes.push_back(*cf.stated_charpoly == oracle_poly()
                            ? "stated characteristic polynomial agrees with the oracle"
                            : "stated characteristic polynomial differs from the oracle");
  if (cf.rho) rep.checks.push_back(near("rho", *cf.rho, spectral_radius(rep.oracle), tol));
  if (cf.energy) rep.checks.push_back(near("energy", *cf.energy, energy(rep.oracle), tol * std::max(1.0, n)));
  if (cf.inertia) {
    const Inertia actual = inertia(rep.oracle);
    rep.checks.push_back({"inertia", actual == *cf.inertia,
                          "claimed " + inertia_text(*cf.inertia) + ", oracle " + inertia_text(actual)});
  }
  if (cf.determinant) {
    const BigInt d = determinant(e.entries());
    rep.checks.push_back({"determinant", d == *cf.determinant,
                          "claimed " + cf.determinant->str() + ", oracle " + d.str()});
  }
  return rep;
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TheoremInfo& theorem_info(std::string_view id) { return entry(id).info; }

std::size_t thread_budget(std::size_t requested, std::size_t jobs) {
  std::size_t n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("ECC_SPECTRA_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) n = static_cast<std::size_t>(v);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, jobs));
}

std::vector<VerificationReport> run_verification(std::string_view id, const SweepOptions& options) {
  const Entry& e = entry(id);
  Context ctx(e.info, options);
  const std::vector<Case> cases = e.build(ctx);

  std::vector<VerificationReport> reports(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      try {
        const auto start = std::chrono::steady_clock::now();
        const Case& c = cases[i];
        const ClosedFormResult cf = c.closed();
        const Graph g = parse_graph_expression(c.expr);
        VerificationReport rep = verify_case(cf, g, options.tol);
        rep.theorem = std::string(id);
        rep.params = c.params;
        rep.graph = c.expr;
        rep.expected = c.expected;
        if (c.extra) c.extra(cf, g, rep);
        if (options.timing)
          rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        reports[i] = std::move(rep);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = thread_budget(options.threads, cases.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return reports;
}

}  // namespace eccspec
