#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eccspec/closed_forms.hpp"
#include "eccspec/ecc_matrix.hpp"
#include "eccspec/edge_list.hpp"
#include "eccspec/expression.hpp"
#include "eccspec/report.hpp"
#include "eccspec/spectral.hpp"
#include "eccspec/verify.hpp"

namespace {

using namespace eccspec;
using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string expr;
  std::string file;

  Graph load() const {
    if (!expr.empty() && !file.empty()) throw UsageError("give either an expression or --file, not both");
    if (!file.empty()) return read_edge_list_file(file);
    if (expr.empty()) throw UsageError("missing graph expression (or --file)");
    return parse_graph_expression(expr);
  }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("expr", in.expr, "Graph expression, e.g. 'hjoin(P4; K2, K1, K1, K2)'");
  cmd->add_option("--file", in.file, "Edge-list file");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Range parse_range(const std::string& text, std::string& name) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("range must look like name=lo:hi, got '" + text + "'");
  name = text.substr(0, eq);
  const std::string body = text.substr(eq + 1);
  const auto colon = body.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoll(body);
      return {v, v};
    }
    return {std::stoll(body.substr(0, colon)), std::stoll(body.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "'");
  }
}

std::size_t size_param(const std::vector<std::int64_t>& ints, std::size_t i) {
  if (i >= ints.size()) throw UsageError("missing integer parameter #" + std::to_string(i + 1));
  if (ints[i] < 0) throw UsageError("parameters must be non-negative");
  return static_cast<std::size_t>(ints[i]);
}

std::vector<std::size_t> size_list(const std::vector<std::int64_t>& ints) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ints.size(); ++i) out.push_back(size_param(ints, i));
  return out;
}

ClosedFormResult evaluate_closed(const std::string& id, const std::vector<std::int64_t>& ints,
                                 const std::string& host, const std::vector<std::string>& graph_exprs) {
  auto need_host = [&] {
    if (host.empty()) throw UsageError(id + " needs --host");
    return parse_graph_expression(host);
  };
  std::vector<Graph> graphs;
  for (const auto& e : graph_exprs) graphs.push_back(parse_graph_expression(e));
  auto need_graphs = [&](std::size_t at_least) {
    if (graphs.size() < at_least)
      throw UsageError(id + " needs at least " + std::to_string(at_least) + " --graph argument(s)");
  };
  auto p = [&](std::size_t i) { return size_param(ints, i); };

  if (id == cf::kCycle) return spec_cycle(p(0));
  if (id == cf::kRad3Quotient) return spec_hjoin_rad3(need_host(), size_list(ints));
  if (id == cf::kLexRad3) return spec_lex_rad3(need_host(), p(0));
  if (id == cf::kLexCycle) return spec_lex_cycle(p(0), p(1));
  if (id == cf::kCompleteHostJoin) return need_graphs(1), spec_complete_host_join(graphs);
  if (id == cf::kCompleteMultipartite) return spec_complete_multipartite(size_list(ints));
  if (id == cf::kRad2Complete) {
    const Graph h = need_host();
    need_graphs(1);
    std::vector<std::size_t> sizes;
    std::vector<bool> flags;
    for (const auto& g : graphs) {
      sizes.push_back(g.order());
      flags.push_back(is_complete(g));
    }
    return spec_hjoin_rad2_complete(h, sizes, flags);
  }
  if (id == cf::kLexComplete) return spec_lex_complete(need_host(), p(0));
  if (id == cf::kP4Join) return spec_p4_join(p(0), p(1));
  if (id == cf::kDoubleStar) return spec_double_star(p(0), p(1));
  if (id == cf::kBarbell) return spec_barbell(p(0));
  if (id == cf::kStarJoinHubComplete || id == cf::kStarJoinHubNoncomplete) {
    need_graphs(2);
    return charpoly_star_join(graphs[0], std::vector<Graph>(graphs.begin() + 1, graphs.end()));
  }
  if (id == cf::kUniformStarJoin) {
    need_graphs(2);
    const RegularFactor hub = regular_factor(graphs[0]), leaf = regular_factor(graphs[1]);
    const std::size_t m = p(0);
    return spec_uniform_star_join(hub.params.n, hub.params.k, m, leaf.params.n, leaf.params.k,
                                  std::vector<Spectrum>(m, leaf.complement_spectrum),
                                  hub.params.k ? std::optional<Spectrum>(hub.complement_spectrum) : std::nullopt);
  }
  if (id == cf::kCliqueCoalescence) return spec_clique_coalescence(p(0), p(1));
  if (id == cf::kK1JoinRegular) return need_graphs(1), spec_k1_join_regular(graphs[0]);
  if (id == cf::kWheel) return spec_wheel(p(0));
  if (id == cf::kSn3) return spec_s_n3(p(0));
  if (id == cf::kStar) return spec_star(p(0));
  if (id == cf::kWindmill) return spec_windmill(p(0), p(1));
  if (id == cf::kCorona) return spec_complete_corona(p(0), p(1));
  throw UsageError("unknown theorem id '" + id + "'");
}

void write_spectrum_text(std::ostream& os, const Spectrum& s) {
  const json r = spectrum_report(s);
  os << "order " << s.order() << "\n";
  for (const auto& g : s.groups()) os << display_value(g.value) << " x" << g.mult << "\n";
  os << "energy " << r["energy"] << "\nrho " << r["rho"] << "\nxi " << r["xi"] << "\ninertia "
     << inertia(s).positive << " " << inertia(s).zero << " " << inertia(s).negative << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Eccentricity matrices, spectra and closed-form checks for graphs and graph joins"};
  app.require_subcommand(1);

  std::string out_path;
  std::string ecc_format = "text", spec_format = "json", poly_format = "json", verify_format = "json";

  GraphInput ecc_in, spec_in, poly_in;
  auto* ecc = app.add_subcommand("ecc", "Print the eccentricity matrix");
  add_graph_input(ecc, ecc_in);
  ecc->add_option("--format", ecc_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ecc->add_option("--out", out_path, "Write to FILE instead of stdout");

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum, energy, spectral radius and inertia");
  add_graph_input(spectrum, spec_in);
  spectrum->add_option("--format", spec_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  spectrum->add_option("--out", out_path, "Write to FILE instead of stdout");

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial (ascending coefficients)");
  add_graph_input(charpoly, poly_in);
  charpoly->add_option("--format", poly_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  charpoly->add_option("--out", out_path, "Write to FILE instead of stdout");

  std::string closed_id, closed_host;
  std::vector<std::int64_t> closed_ints;
  std::vector<std::string> closed_graphs;
  auto* closed = app.add_subcommand("closed", "Evaluate a closed form");
  closed->add_option("id", closed_id, "Closed-form identifier")->required();
  closed->add_option("params", closed_ints, "Integer parameters");
  closed->add_option("--host", closed_host, "Host graph expression");
  closed->add_option("--graph", closed_graphs, "Factor graph expression (repeatable)");
  closed->add_option("--out", out_path, "Write to FILE instead of stdout");

  std::string verify_id;
  std::vector<std::string> range_texts, hosts;
  SweepOptions sweep;
  bool strict = false;
  auto* verify = app.add_subcommand("verify", "Check a closed form against the oracle over a parameter sweep");
  verify->add_option("id", verify_id, "Closed-form identifier, or 'all'")->required();
  verify->add_option("--range", range_texts, "Parameter range name=lo:hi (repeatable)");
  verify->add_option("--host", hosts, "Host graph expression (repeatable)");
  verify->add_option("--samples", sweep.samples, "Random draws per host or sweep");
  verify->add_option("--seed", sweep.seed, "Random seed");
  verify->add_option("--tol", sweep.tol, "Absolute tolerance per eigenvalue")->check(CLI::PositiveNumber);
  verify->add_option("--threads", sweep.threads, "Worker threads (default: ECC_SPECTRA_THREADS or all cores)");
  verify->add_flag("--strict", strict, "Exit 3 when a case falls outside its theorem's hypotheses");
  verify->add_flag("--timing", sweep.timing, "Include per-case wall time (breaks byte-for-byte reproducibility)");
  verify->add_option("--format", verify_format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", out_path, "Write to FILE instead of stdout");

  auto* list = app.add_subcommand("list", "List closed-form identifiers and their sweep parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*ecc) {
    const EccMatrix e = ecc_matrix(ecc_in.load());
    Output out(out_path);
    if (ecc_format == "json")
      out.stream() << matrix_json(e.entries()).dump() << "\n";
    else
      out.stream() << matrix_text(e.entries());
    return 0;
  }
  if (*spectrum) {
    const Spectrum s = ecc_spectrum(spec_in.load());
    Output out(out_path);
    if (spec_format == "text")
      write_spectrum_text(out.stream(), s);
    else
      out.stream() << spectrum_report(s).dump() << "\n";
    return 0;
  }
  if (*charpoly) {
    const IntPoly p = char_poly(ecc_matrix(poly_in.load()).entries());
    Output out(out_path);
    if (poly_format == "text")
      out.stream() << p.to_string("x") << "\n";
    else
      out.stream() << charpoly_json(p).dump() << "\n";
    return 0;
  }
  if (*closed) {
    const ClosedFormResult r = evaluate_closed(closed_id, closed_ints, closed_host, closed_graphs);
    Output out(out_path);
    out.stream() << closed_form_json(r).dump() << "\n";
    return 0;
  }
  if (*list) {
    for (const auto& t : theorem_registry()) {
      std::cout << t.id << "  " << t.summary;
      for (const auto& [name, r] : t.params) std::cout << "  " << name << "=" << r.lo << ":" << r.hi;
      if (!t.default_hosts.empty()) {
        std::cout << "  hosts=";
        for (std::size_t i = 0; i < t.default_hosts.size(); ++i) std::cout << (i ? "|" : "") << t.default_hosts[i];
      }
      std::cout << "\n";
    }
    return 0;
  }

  // verify
  for (const auto& text : range_texts) {
    std::string name;
    const Range r = parse_range(text, name);
    sweep.ranges[name] = r;
  }
  sweep.hosts = hosts;
  std::vector<std::string> ids;
  if (verify_id == "all") {
    if (!sweep.ranges.empty() || !sweep.hosts.empty())
      throw UsageError("--range and --host apply to a single theorem, not 'all'");
    for (const auto& t : theorem_registry()) ids.push_back(t.id);
  } else {
    ids.push_back(verify_id);
  }

  Output out(out_path);
  const std::string& format = verify_format;
  if (format == "csv") out.stream() << csv_header(sweep.timing) << "\n";
  bool mismatch = false, unsupported = false;
  for (const auto& id : ids) {
    for (const auto& rep : run_verification(id, sweep)) {
      if (format == "csv")
        out.stream() << report_csv(rep, sweep.timing) << "\n";
      else if (format == "text")
        out.stream() << report_text(rep) << "\n";
      else
        out.stream() << report_json(rep).dump() << "\n";
      if (rep.verdict == Verdict::mismatch && rep.expected) mismatch = true;
      if (rep.verdict == Verdict::unsupported) unsupported = true;
    }
  }
  if (mismatch) return kExitMismatch;
  if (strict && unsupported) return kExitUnsupported;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
