#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "asymass/catalog/catalog.hpp"
#include "asymass/invariants/invariants.hpp"
#include "asymass/verify/verify.hpp"

namespace asymass {

/// Library version with the git description of the build tree appended.
const char* version_string();

enum class OutputFormat { json, csv, both };

/// A run as read from a config document and the command line. Unset
/// optionals fall back to the model defaults.
struct RunConfig {
  MetricSpec metric;
  std::optional<RadiiLadder> radii;
  std::optional<QuadratureRule> quad;
  BackendKind backend = BackendKind::analytic;
  std::vector<std::string> functionals;
  std::optional<int> index;
  std::string out;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 0;
  int workers = 0;
};

/// Parses a config document. Recognized keys: metric {name, n, params},
/// radii {start, factor, count}, quad {polar, azimuth, radial}, backend,
/// functionals, index, out, format, seed, workers. Unknown keys at any level
/// raise ConfigError naming the key.
RunConfig parse_config(const std::string& json_text);

/// Everything a serialized mass report carries besides the report itself.
struct ReportContext {
  std::string metric;
  int n = 3;
  std::map<std::string, double> params;
  QuadratureRule quad;
  BackendKind backend = BackendKind::analytic;
  RadiiLadder ladder;
  std::uint64_t seed = 0;
};

/// JSON text of one report. Non-finite numbers are written as the strings
/// "inf", "-inf" and "nan" so the document stays valid JSON.
std::string report_json(const MassReport& report, const ReportContext& ctx);
/// Inverse of report_json for the report part (context fields are ignored).
MassReport report_from_json(const std::string& text);

/// CSV table with columns r, value, running_extrapolant, abs_delta.
std::string report_csv(const MassReport& report);

/// Entry point shared by the executable and the tests. Returns the exit
/// code: 0 success, 1 flagged or failed numerics, 2 configuration or
/// admission error (one diagnostic line on `err`).
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace asymass
