#include "eccspec/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace eccspec {

namespace {

using nlohmann::json;

json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

json inertia_json(const Inertia& in) { return json::array({in.positive, in.zero, in.negative}); }

std::string number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string failed_checks(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += (out.empty() ? "" : ";") + c.name;
  return out;
}

}  // namespace

double display_value(double x) {
  const double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x))) return r == 0 ? 0.0 : r;
  return x;
}

json eigs_json(const Spectrum& s) {
  json out = json::array();
  for (const auto& g : s.groups()) out.push_back({{"value", display_value(g.value)}, {"mult", g.mult}});
  return out;
}

json spectrum_report(const Spectrum& s) {
  return {{"order", s.order()},
          {"eigs", eigs_json(s)},
          {"energy", display_value(energy(s))},
          {"rho", display_value(spectral_radius(s))},
          {"xi", display_value(least_eigenvalue(s))},
          {"inertia", inertia_json(inertia(s))}};
}

json charpoly_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(coeff_json(c));
  return {{"coeffs", coeffs}};
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
  return os.str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return {{"n", m.rows()}, {"rows", rows}};
}

json closed_form_json(const ClosedFormResult& r) {
  json out{{"id", r.id}, {"supported", r.supported()}};
  json pre = json::array();
  for (const auto& p : r.preconditions) pre.push_back({{"name", p.name}, {"holds", p.holds}});
  out["preconditions"] = pre;
  if (r.spectrum) out["spectrum"] = spectrum_report(*r.spectrum);
  if (r.charpoly) {
    out["charpoly"] = {{"core", charpoly_json(r.charpoly->core)}, {"residual", eigs_json(r.charpoly->residual)}};
    try {
      out["spectrum"] = spectrum_report(r.charpoly->roots());
    } catch (const std::domain_error&) {
      out["spectrum"] = nullptr;
    }
  }
  if (r.inertia) out["inertia"] = inertia_json(*r.inertia);
  if (r.rho) out["rho"] = display_value(*r.rho);
  if (r.energy) out["energy"] = display_value(*r.energy);
  if (r.determinant) out["determinant"] = coeff_json(*r.determinant);
  if (r.exact_charpoly) out["exact_charpoly"] = charpoly_json(*r.exact_charpoly);
  if (r.stated_charpoly) out["stated_charpoly"] = charpoly_json(*r.stated_charpoly);
  if (r.corrected_spectrum) out["corrected_spectrum"] = spectrum_report(*r.corrected_spectrum);
  if (r.corrected_charpoly)
    out["corrected_charpoly"] = {{"core", charpoly_json(r.corrected_charpoly->core)},
                                 {"residual", eigs_json(r.corrected_charpoly->residual)}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json out{{"theorem", r.theorem},
           {"params", r.params},
           {"graph", r.graph},
           {"expected", r.expected},
           {"verdict", std::string(to_string(r.verdict))},
           {"deviation", std::isinf(r.deviation) ? json(nullptr) : json(r.deviation)},
           {"multiplicities_agree", r.multiplicities_agree},
           {"trace", r.trace},
           {"trace_ok", r.trace_ok},
           {"diagnosis", r.diagnosis},
           {"corrected_deviation", optional_number(r.corrected_deviation)},
           {"corrected_match", r.corrected_match},
           {"closed_form", eigs_json(r.closed_form)},
           {"oracle", eigs_json(r.oracle)},
           {"checks", checks},
           {"failed_preconditions", r.failed_preconditions},
           {"notes", r.notes}};
  if (r.wall_ms) out["wall_ms"] = *r.wall_ms;
  return out;
}

std::string csv_header(bool timing) {
  std::string h =
      "theorem,params,graph,expected,verdict,deviation,trace,trace_ok,diagnosis,"
      "corrected_deviation,failed_checks,failed_preconditions";
  return timing ? h + ",wall_ms" : h;
}

std::string report_csv(const VerificationReport& r, bool timing) {
  std::string pre;
  for (const auto& p : r.failed_preconditions) pre += (pre.empty() ? "" : ";") + p;
  std::string row = csv_field(r.theorem) + "," + csv_field(r.params) + "," + csv_field(r.graph) + "," +
                    (r.expected ? "true" : "false") + "," + std::string(to_string(r.verdict)) + "," +
                    number(r.deviation) + "," + number(r.trace) + "," + (r.trace_ok ? "true" : "false") + "," +
                    r.diagnosis + "," + (r.corrected_deviation ? number(*r.corrected_deviation) : "") + "," +
                    csv_field(failed_checks(r)) + "," + csv_field(pre);
  if (timing) row += "," + (r.wall_ms ? number(*r.wall_ms) : "");
  return row;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.theorem << " [" << r.params << "] " << to_string(r.verdict) << " deviation=" << number(r.deviation);
  if (!r.diagnosis.empty()) os << " diagnosis=" << r.diagnosis;
  if (!r.trace_ok) os << " trace=" << number(r.trace);
  if (r.corrected_deviation) os << " corrected_deviation=" << number(*r.corrected_deviation);
  if (!r.expected) os << " (known defect)";
  const std::string failed = failed_checks(r);
  if (!failed.empty()) os << " failed_checks=" << failed;
  if (r.wall_ms) os << " wall_ms=" << number(*r.wall_ms);
  return os.str();
}

}  // namespace eccspec
