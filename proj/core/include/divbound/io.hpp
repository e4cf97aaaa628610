#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "divbound/bounds.hpp"
#include "divbound/jointrange.hpp"
#include "divbound/measure.hpp"

namespace divbound::io {

// Measure files:
//   JSON  {"atoms": [{"id": "a1", "w": 0.5}, ...]}
//   CSV   header "id,w", then one atom per line
// NaN/inf weights, duplicate ids and missing fields are ParseErrors.

enum class MeasureFormat { Json, Csv };

SignedMeasure parse_measure_json(std::string_view text);
SignedMeasure parse_measure_csv(std::string_view text);

/// Format chosen by extension (.json / .csv); otherwise sniffed from the
/// first non-blank character ('{' means JSON).
SignedMeasure read_signed_measure(const std::filesystem::path& path);
/// read_signed_measure plus the ProbabilityMeasure invariants; failures of
/// the latter are also reported as ParseError.
ProbabilityMeasure read_probability_measure(const std::filesystem::path& path);

std::string measure_to_json(const SignedMeasure& m, int precision = 9);
std::string measure_to_csv(const SignedMeasure& m, int precision = 9);

/// {"divergence": ..., "value": number|"inf", "tv_upper_bound": ..., "method": ...}
/// Numbers are rounded to `precision` significant digits.
std::string certificate_to_json(const TvCertificate& c, int precision = 9);
TvCertificate certificate_from_json(std::string_view text);

std::string decomposition_to_json(const HahnDecomposition& d, int precision = 9);

std::string report_to_json(const VerificationReport& r, int precision = 9);

/// Header "p,q,tv,divergence,lower_bound,slack"; "inf" for +inf.
void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records, int precision = 9);

/// x rounded to `precision` significant digits (via its decimal form).
double round_significant(double x, int precision);

}  // namespace divbound::io
