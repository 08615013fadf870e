#pragma once

#include <string>

#include <json.hpp>

#include "eccspec/closed_forms.hpp"
#include "eccspec/int_matrix.hpp"
#include "eccspec/polynomial.hpp"
#include "eccspec/spectral.hpp"
#include "eccspec/verify.hpp"

namespace eccspec {

// Eigenvalues within 1e-9 (relative) of an integer are printed as that integer.
double display_value(double x);

nlohmann::json eigs_json(const Spectrum& s);
// {"order", "eigs": [{"value", "mult"}], "energy", "rho", "xi", "inertia": [p, z, m]}
nlohmann::json spectrum_report(const Spectrum& s);
// {"coeffs": [c_0, ..., c_n]}; coefficients beyond 64 bits are written as strings.
nlohmann::json charpoly_json(const IntPoly& p);

// "n" on the first line, then one row of space-separated integers per line.
std::string matrix_text(const IntMatrix& m);
// {"n", "rows": [[...]]}
nlohmann::json matrix_json(const IntMatrix& m);

nlohmann::json closed_form_json(const ClosedFormResult& r);

nlohmann::json report_json(const VerificationReport& r);
std::string csv_header(bool timing);
std::string report_csv(const VerificationReport& r, bool timing);
std::string report_text(const VerificationReport& r);

}  // namespace eccspec
