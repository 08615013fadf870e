#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eccspec/closed_forms.hpp"
#include "eccspec/graph.hpp"
#include "eccspec/spectral.hpp"

namespace eccspec {

enum class Verdict { match, mismatch, unsupported };

std::string_view to_string(Verdict v);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string theorem;
  std::string params;  // "name=value" pairs separated by spaces
  std::string graph;   // expression that rebuilds the oracle graph
  bool expected = true;  // false where the statement is known to be defective

  Verdict verdict = Verdict::unsupported;
  Spectrum closed_form;
  Spectrum oracle;
  // Largest |difference| between the sorted eigenvalue lists; infinity when
  // the orders differ or the closed form has no real spectrum.
  double deviation = 0;
  bool multiplicities_agree = false;

  // Sum of the closed-form eigenvalues. Any eccentricity matrix has zero
  // trace, so a nonzero sum convicts the formula rather than the code.
  double trace = 0;
  bool trace_ok = true;
  std::optional<double> corrected_deviation;
  bool corrected_match = false;
  // Empty unless the verdict is mismatch: "formula-defect" when the trace
  // test fails or a corrected form matches, "implementation-suspect" otherwise.
  std::string diagnosis;

  std::vector<Check> checks;
  std::vector<std::string> failed_preconditions;
  std::vector<std::string> notes;
  std::optional<double> wall_ms;

  bool checks_passed() const;
};

// Compares a closed form against the definitional oracle on g.
VerificationReport verify_case(const ClosedFormResult& cf, const Graph& g, double tol);

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct SweepOptions {
  std::map<std::string, Range> ranges;  // overrides of a theorem's defaults
  std::vector<std::string> hosts;       // host expressions, where the theorem takes one
  std::size_t samples = 0;              // random draws; 0 keeps the theorem default
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::size_t threads = 0;  // 0: ECC_SPECTRA_THREADS, else hardware concurrency
  bool timing = false;
};

struct TheoremInfo {
  std::string id;
  std::string summary;
  std::vector<std::pair<std::string, Range>> params;  // defaults
  std::vector<std::string> default_hosts;
  std::size_t default_samples = 0;
};

const std::vector<TheoremInfo>& theorem_registry();
// Throws std::invalid_argument for an unknown id.
const TheoremInfo& theorem_info(std::string_view id);

// Runs the sweep for one theorem. Cases are generated in a fixed order from
// the seed, evaluated concurrently, and returned in generation order.
// Throws std::invalid_argument for an unknown id, an unknown range name or
// an empty range.
std::vector<VerificationReport> run_verification(std::string_view id, const SweepOptions& options);

// Worker count: `requested` if nonzero, else ECC_SPECTRA_THREADS if set and
// positive, else the hardware concurrency; never more than `jobs`, never 0.
std::size_t thread_budget(std::size_t requested, std::size_t jobs);

}  // namespace eccspec
