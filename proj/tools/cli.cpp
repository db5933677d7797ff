#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "apv/classical.hpp"
#include "apv/cos_example.hpp"
#include "apv/error.hpp"
#include "apv/json_io.hpp"
#include "apv/principal_value.hpp"
#include "apv/spf.hpp"

namespace apv::cli {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::size_t route_rank(const std::string& name) {
  const auto& names = known_routes();
  return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
}

bool wants(const RunConfig& cfg, const char* name) {
  return std::find(cfg.routes.begin(), cfg.routes.end(), name) != cfg.routes.end();
}

RouteResult from_apv(const std::string& name, const ApvReport& r) {
  RouteResult out{name, r.value, r.err_estimate, r.evals, r.converged, report_to_json(r)};
  out.detail["converged"] = r.converged;
  return out;
}

RouteResult run_fox(const IntegralSpec& spec, const QuadConfig& q) {
  const FoxResult fox = fox_limit(spec, EpsSchedule::defaults(spec), q);
  RouteResult out{"fox", fox.value, fox.err_estimate, fox.evals, fox.converged && !fox.diverged, {}};
  json samples = json::array();
  for (const auto& s : fox.samples) {
    samples.push_back({{"eps", s.eps}, {"raw", s.raw}, {"divergent", s.divergent},
                       {"subtracted", s.subtracted}});
  }
  out.detail = {{"value", out.value},         {"err_estimate", out.err_estimate},
                {"evals", out.evals},         {"converged", out.converged},
                {"diverged", fox.diverged},   {"samples", samples}};
  return out;
}

RouteResult run_series(const IntegralSpec& spec, const QuadConfig& q, std::ostream& err) {
  const int K = default_taylor_terms;
  const TaylorCoeffs coeffs = taylor_from_expr(spec, K, q);
  const SeriesValue s = series_value(coeffs, spec, K);
  if (coeffs.max_imag > 1e-8) {
    err << "warning: Taylor coefficients have imaginary parts up to " << fmt("%.3g", coeffs.max_imag)
        << "; f may not be real on the axis\n";
  }
  RouteResult out{"series", s.value, 10.0 * s.last_term, coeffs.evals, true, {}};
  out.detail = {{"value", out.value},         {"err_estimate", out.err_estimate},
                {"evals", out.evals},         {"converged", true},
                {"terms", K},                 {"last_term", s.last_term},
                {"circle_radius", coeffs.circle_radius}};
  return out;
}

RouteResult run_spf(const IntegralSpec& spec, const QuadConfig& q) {
  const BoundaryReport b = boundary_values(spec, YSchedule::defaults(spec), q);
  const double value = (0.5 * (b.phi_plus + b.phi_minus)).real();
  RouteResult out{"spf", value, b.extrapolation_err, b.evals, !b.diverged, boundary_to_json(b)};
  out.detail["value"] = value;
  out.detail["err_estimate"] = b.extrapolation_err;
  out.detail["converged"] = out.converged;
  return out;
}

struct Paths {
  std::optional<ComplexPath> plus;
  std::optional<ComplexPath> minus;
};

Paths load_paths(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open path file " + file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("path file " + file + " is not valid JSON: " + e.what());
  }
  if (j.is_object() && j.contains("paths")) j = j["paths"];
  if (!j.is_array()) j = json::array({j});
  Paths p;
  for (const auto& item : j) {
    ComplexPath path = path_from_json(item);
    auto& slot = path.side() == Side::above ? p.plus : p.minus;
    if (slot) throw DomainError("path file has two paths for side " + std::string(side_name(path.side())));
    slot = std::move(path);
  }
  if (!p.plus && !p.minus) throw DomainError("path file " + file + " holds no paths");
  if (!p.plus) p.plus = mirror_path(*p.minus);
  if (!p.minus) p.minus = mirror_path(*p.plus);
  return p;
}

void write_integrand(const std::string& file, const IntegralSpec& spec, const Paths& paths) {
  std::ofstream out(file);
  if (!out) throw DomainError("cannot write " + file);
  out << "side,segment,t,z_re,z_im,integrand_re,integrand_im\n";
  constexpr int samples = 129;
  char buf[256];
  for (const ComplexPath* path : {&*paths.plus, &*paths.minus}) {
    const auto side = side_name(path->side());
    for (std::size_t k = 0; k < path->segments().size(); ++k) {
      const Segment& seg = path->segments()[k];
      for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        const complex z = segment_point(seg, t);
        const complex g = spec.integrand(z) * segment_tangent(seg, t);
        std::snprintf(buf, sizeof buf, "%.*s,%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      static_cast<int>(side.size()), side.data(), k, t, z.real(), z.imag(),
                      g.real(), g.imag());
        out << buf;
      }
    }
  }
}

void write_asymptotic(const std::string& file, const QuadConfig& q) {
  std::ofstream out(file);
  if (!out) throw DomainError("cannot write " + file);
  std::vector<int> ns;
  for (int n = 1; n <= 101; n += 2) ns.push_back(n);
  write_asymptotic_csv(out, asymptotic_table(ns, 6, q));
}

json spec_json(const IntegralSpec& spec) {
  json poles = json::array();
  for (complex p : spec.decl().declared_poles()) poles.push_back(complex_to_json(p));
  return {{"f", spec.f().to_string()}, {"a", spec.a()},   {"b", spec.b()},
          {"x0", spec.x0()},           {"n", spec.n()},   {"entire", spec.decl().entire()},
          {"poles", poles},            {"margin", default_margin(spec)}};
}

}  // namespace

Agreement check_agreement(const std::vector<RouteResult>& routes) {
  Agreement a;
  a.threshold = 1e-8;
  double worst = -1.0;
  for (std::size_t i = 0; i < routes.size(); ++i) {
    for (std::size_t j = i + 1; j < routes.size(); ++j) {
      const double d = std::abs(routes[i].value - routes[j].value);
      const double thr = std::max(1e-8, 10.0 * (routes[i].err_estimate + routes[j].err_estimate));
      const double ratio = d / thr;
      if (!(ratio <= 1.0)) a.ok = false;
      if (ratio > worst || std::isnan(ratio)) {
        worst = std::isnan(ratio) ? INFINITY : ratio;
        a.worst_pair = {routes[i].name, routes[j].name};
        a.abs_diff = d;
        a.threshold = thr;
      }
    }
  }
  return a;
}

json to_json(const RunReport& report) {
  json routes = json::object();
  for (const auto& r : report.routes) routes[r.name] = r.detail;
  return {{"spec", report.spec},
          {"routes", routes},
          {"agreement",
           {{"ok", report.agreement.ok},
            {"worst_pair", report.agreement.worst_pair},
            {"abs_diff", report.agreement.abs_diff},
            {"threshold", report.agreement.threshold}}}};
}

RunReport report_from_json(const json& j) {
  try {
    RunReport r;
    r.spec = j.at("spec");
    for (const auto& [name, d] : j.at("routes").items()) {
      if (route_rank(name) == known_routes().size()) throw DomainError("unknown route " + name);
      r.routes.push_back({name, d.at("value").get<double>(), d.at("err_estimate").get<double>(),
                          d.at("evals").get<long>(), d.at("converged").get<bool>(), d});
    }
    std::sort(r.routes.begin(), r.routes.end(),
              [](const auto& x, const auto& y) { return route_rank(x.name) < route_rank(y.name); });
    const json& a = j.at("agreement");
    r.agreement.ok = a.at("ok").get<bool>();
    r.agreement.worst_pair = a.at("worst_pair").get<std::vector<std::string>>();
    r.agreement.abs_diff = a.at("abs_diff").get<double>();
    r.agreement.threshold = a.at("threshold").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed run report: ") + e.what());
  }
}

void emit_report(const RunReport& report, Format format, std::ostream& out) {
  char buf[256];
  switch (format) {
    case Format::json:
      out << to_json(report).dump(2) << '\n';
      return;
    case Format::csv:
      out << "route,value,err_estimate,evals\n";
      for (const auto& r : report.routes) {
        std::snprintf(buf, sizeof buf, "%s,%.17g,%.6g,%ld\n", r.name.c_str(), r.value,
                      r.err_estimate, r.evals);
        out << buf;
      }
      return;
    case Format::text:
      break;
  }
  const json& s = report.spec;
  out << "integral of " << s.at("f").get<std::string>() << " / (z - " << s.at("x0").get<double>()
      << ")^" << s.at("n").get<int>() + 1 << " over [" << s.at("a").get<double>() << ", "
      << s.at("b").get<double>() << "]\n";
  std::snprintf(buf, sizeof buf, "%-8s  %-24s  %-12s  %s\n", "route", "value", "err_estimate",
                "evals");
  out << buf;
  for (const auto& r : report.routes) {
    std::snprintf(buf, sizeof buf, "%-8s  %-24.17g  %-12.3g  %ld%s\n", r.name.c_str(), r.value,
                  r.err_estimate, r.evals, r.converged ? "" : "  (not converged)");
    out << buf;
  }
  const Agreement& a = report.agreement;
  if (a.worst_pair.empty()) {
    out << "agreement: single route\n";
  } else {
    std::snprintf(buf, sizeof buf, "agreement: %s (worst %s/%s, |diff| %.3g, threshold %.3g)\n",
                  a.ok ? "ok" : "FAILED", a.worst_pair[0].c_str(), a.worst_pair[1].c_str(),
                  a.abs_diff, a.threshold);
    out << buf;
  }
}

Outcome run(const RunConfig& config, std::ostream& err) {
  if (config.routes.empty()) {
    err << "error: no routes requested\n";
    return {exit_code::usage, {}};
  }
  for (const auto& name : config.routes) {
    if (route_rank(name) == known_routes().size()) {
      err << "error: unknown route '" << name << "'\n";
      return {exit_code::usage, {}};
    }
  }

  std::optional<IntegralSpec> spec;
  Paths paths;
  QuadConfig q{config.rel_tol, config.abs_tol, config.max_subdivisions};
  try {
    q.validate();
    const Expr f = parse(config.function);
    std::vector<complex> poles;
    if (config.poles) poles = parse_point_list(*config.poles);
    const bool entire = f.is_entire() && poles.empty();
    if (!f.is_entire() && poles.empty()) {
      err << "warning: '" << f.to_string()
          << "' contains division or tan but no --poles were given; singularities near [a, b] "
             "will not be checked\n";
    }
    spec.emplace(f, entire ? AnalyticityDecl::entire_function() : AnalyticityDecl::with_poles(poles),
                 config.a, config.b, config.x0, config.n);
    if (config.margin) spec->set_margin(*config.margin);
    if (auto v = validate_region(spec->decl(), *spec, default_margin(*spec))) {
      err << "error: declared pole " << format_complex(v->pole) << " is " << fmt("%.3g", v->distance)
          << " from [a, b], inside the margin " << fmt("%.3g", default_margin(*spec))
          << "; choose a shorter interval or a smaller --margin\n";
      return {exit_code::usage, {}};
    }
    if (config.path_file) {
      paths = load_paths(*config.path_file);
    } else if (config.path_eps) {
      paths.plus = semicircle_path(*spec, *config.path_eps, Side::above);
      paths.minus = semicircle_path(*spec, *config.path_eps, Side::below);
    } else {
      paths.plus = default_path(*spec, Side::above);
      paths.minus = default_path(*spec, Side::below);
    }
    validate_path(*paths.plus, *spec, Side::above);
    validate_path(*paths.minus, *spec, Side::below);
    if (config.emit_integrand) write_integrand(*config.emit_integrand, *spec, paths);
  } catch (const ParseError& e) {
    err << "error: cannot parse expression: " << e.what() << '\n';
    return {exit_code::usage, {}};
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
    return {exit_code::numerical, {}};
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return {exit_code::usage, {}};
  }

  RunReport report;
  report.spec = spec_json(*spec);
  try {
    for (const auto& name : known_routes()) {
      if (!wants(config, name.c_str())) continue;
      if (name == "average") {
        report.routes.push_back(from_apv(name, apv_average(*spec, *paths.plus, *paths.minus, q)));
      } else if (name == "upper") {
        report.routes.push_back(from_apv(name, apv_upper(*spec, *paths.plus, q)));
      } else if (name == "lower") {
        report.routes.push_back(from_apv(name, apv_lower(*spec, *paths.minus, q)));
      } else if (name == "fox") {
        report.routes.push_back(run_fox(*spec, q));
      } else if (name == "series") {
        report.routes.push_back(run_series(*spec, q, err));
      } else if (name == "spf") {
        report.routes.push_back(run_spf(*spec, q));
      }
    }
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
    return {exit_code::numerical, {}};
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return {exit_code::usage, {}};
  }

  report.agreement = check_agreement(report.routes);
  int code = exit_code::agree;
  for (const auto& r : report.routes) {
    if (!r.converged) {
      err << "warning: route " << r.name << " did not converge\n";
      code = exit_code::numerical;
    }
  }
  if (code == exit_code::agree && !report.agreement.ok) code = exit_code::disagree;
  return {code, std::move(report)};
}

Parsed parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypersingular integrals int_a^b f(x)/(x-x0)^(n+1) dx as analytic principal values",
               "apv"};
  RunConfig cfg;
  std::optional<double> a, b, x0;
  std::string format = "text";
  cfg.routes.clear();

  app.add_option("--f", cfg.function, "Expression in z, e.g. \"cos(z)\"");
  app.add_option("-a", a, "Left endpoint");
  app.add_option("-b", b, "Right endpoint");
  app.add_option("--x0", x0, "Pole location, a < x0 < b");
  app.add_option("-n", cfg.n, "Order: the integrand is f / (z - x0)^(n+1)")->check(CLI::NonNegativeNumber);
  app.add_option("--routes", cfg.routes, "Comma-separated subset of average,upper,lower,fox,series,spf")
      ->delimiter(',')
      ->check(CLI::IsMember(known_routes()));
  auto* eps = app.add_option("--path-eps", cfg.path_eps, "Indentation radius of the semicircle paths");
  app.add_option("--path-file", cfg.path_file, "JSON path (or array of paths) to integrate along")
      ->check(CLI::ExistingFile)
      ->excludes(eps);
  app.add_option("--poles", cfg.poles, "Declared poles of f, e.g. \"i,-i\"");
  app.add_option("--margin", cfg.margin, "Minimum pole distance from [a, b] and from any path");
  app.add_option("--rel-tol", cfg.rel_tol, "Relative quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--abs-tol", cfg.abs_tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-subdiv", cfg.max_subdivisions, "Quadrature subdivision budget")
      ->envname("APV_MAX_SUBDIV")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--emit-integrand", cfg.emit_integrand, "Write integrand samples along both paths to CSV");
  app.add_option("--emit-asymptotic", cfg.emit_asymptotic,
                 "Write the large-n table for cos(x)/x^(n+1) on [-1, 1] to CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? exit_code::agree : exit_code::usage};
  }

  if (cfg.function.empty()) {
    if (cfg.emit_asymptotic) return {cfg, exit_code::agree};
    err << "error: --f is required\n" << app.help();
    return {std::nullopt, exit_code::usage};
  }
  if (!a || !b || !x0) {
    err << "error: -a, -b and --x0 are required\n";
    return {std::nullopt, exit_code::usage};
  }
  if (!(*a < *x0 && *x0 < *b)) {
    err << "error: need a < x0 < b\n";
    return {std::nullopt, exit_code::usage};
  }
  cfg.a = *a;
  cfg.b = *b;
  cfg.x0 = *x0;
  if (cfg.routes.empty()) cfg.routes = {"average"};
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  return {cfg, exit_code::agree};
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Parsed parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  const RunConfig& cfg = *parsed.config;
  if (cfg.emit_asymptotic) {
    try {
      write_asymptotic(*cfg.emit_asymptotic,
                       QuadConfig{cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions});
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return exit_code::usage;
    }
    if (cfg.function.empty()) return exit_code::agree;
  }
  const Outcome outcome = run(cfg, err);
  if (outcome.report) emit_report(*outcome.report, cfg.format, out);
  return outcome.exit_code;
}

}  // namespace apv::cli
