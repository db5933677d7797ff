#include "apv/principal_value.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "apv/error.hpp"

namespace apv {

namespace {
constexpr double pi = std::numbers::pi;
constexpr complex i_unit{0.0, 1.0};
}  // namespace

std::string_view route_name(Route route) noexcept {
  switch (route) {
    case Route::average: return "average";
    case Route::upper: return "upper";
    case Route::lower: return "lower";
  }
  return "?";
}

double default_circle_radius(const IntegralSpec& spec, std::optional<double> margin) {
  const double m = margin.value_or(default_margin(spec));
  double r = 0.5 * spec.pole_gap();
  const double dmin = nearest_pole_distance(spec.decl(), complex{spec.x0(), 0.0});
  if (std::isfinite(dmin)) r = std::min(r, dmin - m);
  if (!(r > 0.0)) {
    throw RegionError("no admissible Cauchy circle about x0: nearest declared pole at distance " +
                          std::to_string(dmin),
                      complex{});
  }
  return r;
}

QuadResult cauchy_coefficient(const IntegralSpec& spec, int k, double radius, const QuadConfig& cfg,
                              std::optional<double> margin) {
  if (k < 0) throw DomainError("Taylor coefficient order must be nonnegative");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("circle radius must be > 0");
  const double m = margin.value_or(default_margin(spec));
  const complex center{spec.x0(), 0.0};
  for (const auto& p : spec.decl().declared_poles()) {
    if (std::abs(p - center) < radius + m) {
      throw RegionError("Cauchy circle of radius " + std::to_string(radius) +
                            " comes within margin of declared pole " + format_complex(p),
                        p);
    }
  }
  const Segment circle = Arc{center, radius, 0.0, 2.0 * pi};
  const Expr& f = spec.f();
  auto g = [&](complex z) {
    const complex w = z - center;
    complex denom = w;
    for (int j = 0; j < k; ++j) denom *= w;
    return f.eval(z) / denom;
  };
  // The coefficient is O(max|f| / r^k); measure tolerances on that scale.
  QuadConfig scaled = cfg;
  scaled.abs_tol = cfg.abs_tol * 2.0 * pi / std::pow(radius, k);
  QuadResult q = integrate_segments(g, std::span<const Segment>(&circle, 1), scaled);
  q.value /= 2.0 * pi * i_unit;
  q.err_estimate /= 2.0 * pi;
  q.abs_integral /= 2.0 * pi;
  return q;
}

complex derivative_at_pole(const IntegralSpec& spec, double circle_radius, const QuadConfig& cfg) {
  return cauchy_coefficient(spec, spec.n(), circle_radius, cfg).value;
}

namespace {

QuadResult residue_quad(const IntegralSpec& spec, const QuadConfig& cfg) {
  return cauchy_coefficient(spec, spec.n(), default_circle_radius(spec), cfg);
}

QuadResult side_integral(const IntegralSpec& spec, const ComplexPath& path, Side side,
                         const QuadConfig& cfg) {
  validate_path(path, spec, side);
  return integrate_path(spec, path, cfg);
}

}  // namespace

ApvReport apv_average(const IntegralSpec& spec, const ComplexPath& path_plus,
                      const ComplexPath& path_minus, const QuadConfig& cfg) {
  const QuadResult plus = side_integral(spec, path_plus, Side::above, cfg);
  const QuadResult minus = side_integral(spec, path_minus, Side::below, cfg);
  const QuadResult res = residue_quad(spec, cfg);

  ApvReport r;
  r.route = Route::average;
  const complex avg = 0.5 * (plus.value + minus.value);
  r.value = avg.real();
  r.imag_residual = avg.imag();
  r.int_plus = plus.value;
  r.int_minus = minus.value;
  r.residue_term = res.value;
  r.err_estimate = 0.5 * (plus.err_estimate + minus.err_estimate);
  r.evals = plus.evals + minus.evals + res.evals;
  r.converged = plus.converged && minus.converged && res.converged;
  r.diagnostics = {{"int_plus", plus}, {"int_minus", minus}, {"residue", res}};
  return r;
}

ApvReport apv_upper(const IntegralSpec& spec, const ComplexPath& path_plus, const QuadConfig& cfg) {
  const QuadResult plus = side_integral(spec, path_plus, Side::above, cfg);
  const QuadResult res = residue_quad(spec, cfg);

  ApvReport r;
  r.route = Route::upper;
  const complex v = plus.value + i_unit * pi * res.value;
  r.value = v.real();
  r.imag_residual = v.imag();
  r.int_plus = plus.value;
  r.residue_term = res.value;
  r.err_estimate = plus.err_estimate + pi * res.err_estimate;
  r.evals = plus.evals + res.evals;
  r.converged = plus.converged && res.converged;
  r.diagnostics = {{"int_plus", plus}, {"residue", res}};
  return r;
}

ApvReport apv_lower(const IntegralSpec& spec, const ComplexPath& path_minus, const QuadConfig& cfg) {
  const QuadResult minus = side_integral(spec, path_minus, Side::below, cfg);
  const QuadResult res = residue_quad(spec, cfg);

  ApvReport r;
  r.route = Route::lower;
  const complex v = minus.value - i_unit * pi * res.value;
  r.value = v.real();
  r.imag_residual = v.imag();
  r.int_minus = minus.value;
  r.residue_term = res.value;
  r.err_estimate = minus.err_estimate + pi * res.err_estimate;
  r.evals = minus.evals + res.evals;
  r.converged = minus.converged && res.converged;
  r.diagnostics = {{"int_minus", minus}, {"residue", res}};
  return r;
}

JumpCheck jump_relation_check(const IntegralSpec& spec, const ComplexPath& path_plus,
                              const ComplexPath& path_minus, const QuadConfig& cfg) {
  const QuadResult plus = side_integral(spec, path_plus, Side::above, cfg);
  const QuadResult minus = side_integral(spec, path_minus, Side::below, cfg);
  const QuadResult res = residue_quad(spec, cfg);
  JumpCheck j;
  j.lhs = minus.value - plus.value;
  j.rhs = 2.0 * pi * i_unit * res.value;
  j.abs_diff = std::abs(j.lhs - j.rhs);
  j.err_estimate = plus.err_estimate + minus.err_estimate + 2.0 * pi * res.err_estimate;
  return j;
}

}  // namespace apv
