#pragma once

// Command-line front end: one integral, several routes, a cross-check.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace apv::cli {

using json = nlohmann::json;

inline const std::vector<std::string>& known_routes() {
  static const std::vector<std::string> names{"average", "upper", "lower", "fox", "series", "spf"};
  return names;
}

enum class Format { text, json, csv };

struct RunConfig {
  std::string function;
  double a = 0.0, b = 0.0, x0 = 0.0;
  int n = 0;
  std::vector<std::string> routes{"average"};
  std::optional<double> path_eps;
  std::optional<std::string> path_file;
  std::optional<std::string> poles;
  std::optional<double> margin;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  Format format = Format::text;
  std::optional<std::string> emit_integrand;
  std::optional<std::string> emit_asymptotic;
};

namespace exit_code {
inline constexpr int agree = 0;
inline constexpr int usage = 1;
inline constexpr int disagree = 2;
inline constexpr int numerical = 3;
}  // namespace exit_code

struct RouteResult {
  std::string name;
  double value = 0.0;
  double err_estimate = 0.0;
  long evals = 0;
  bool converged = true;
  /// Route-specific fields, including the four above.
  json detail;

  friend bool operator==(const RouteResult&, const RouteResult&) = default;
};

struct Agreement {
  bool ok = true;
  std::vector<std::string> worst_pair;
  double abs_diff = 0.0;
  double threshold = 0.0;

  friend bool operator==(const Agreement&, const Agreement&) = default;
};

struct RunReport {
  json spec;
  /// Always in known_routes() order.
  std::vector<RouteResult> routes;
  Agreement agreement;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Pairwise check with threshold max(1e-8, 10 (e_i + e_j)); worst_pair is the
/// pair with the largest |difference| relative to its threshold.
Agreement check_agreement(const std::vector<RouteResult>& routes);

/// {"spec": ..., "routes": {name: {...}}, "agreement": {...}}
json to_json(const RunReport& report);
RunReport report_from_json(const json& j);

void emit_report(const RunReport& report, Format format, std::ostream& out);

struct Outcome {
  int exit_code = exit_code::agree;
  std::optional<RunReport> report;
};

/// Runs every requested route. Usage, parse and region problems are printed
/// to err and give exit code 1 with no report.
Outcome run(const RunConfig& config, std::ostream& err);

struct Parsed {
  std::optional<RunConfig> config;
  int exit_code = exit_code::agree;
};

/// Fills a RunConfig from argv and the APV_MAX_SUBDIV variable. Help output
/// and errors go to out / err; config is empty when the program should stop.
Parsed parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// parse_args, run, emit. The whole program.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apv::cli
