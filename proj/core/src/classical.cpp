#include "apv/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "apv/error.hpp"
#include "apv/extrapolation.hpp"
#include "apv/principal_value.hpp"

namespace apv {

EpsSchedule EpsSchedule::defaults(const IntegralSpec& spec) {
  EpsSchedule s;
  const double eps0 = spec.pole_gap() / 4.0;
  for (int k = 0; k < 12; ++k) s.eps_values.push_back(std::ldexp(eps0, -k));
  return s;
}

void EpsSchedule::validate(const IntegralSpec& spec) const {
  if (eps_values.empty()) throw DomainError("eps schedule is empty");
  if (extrapolation_order < 0) throw DomainError("extrapolation order must be >= 0");
  for (std::size_t k = 0; k < eps_values.size(); ++k) {
    const double e = eps_values[k];
    if (!(e > 0.0) || !(e < spec.pole_gap())) {
      throw DomainError("eps schedule entry " + std::to_string(e) + " outside (0, min(x0-a, b-x0))");
    }
    if (k > 0 && !(e < eps_values[k - 1])) {
      throw DomainError("eps schedule must be strictly decreasing");
    }
  }
}

double divergent_part(std::span<const double> taylor, int n, double eps) {
  double h = 0.0;
  for (int k = 0; k < n; ++k) {
    const int m = n - k;
    if (m % 2 == 0) continue;  // (1 - (-1)^m) vanishes
    h += taylor[static_cast<std::size_t>(k)] / m * 2.0 / std::pow(eps, m);
  }
  return h;
}

QuadResult raw_symmetric_sum(const IntegralSpec& spec, double eps, const QuadConfig& cfg) {
  if (!(eps > 0.0) || !(eps < spec.pole_gap())) {
    throw DomainError("eps must lie in (0, min(x0-a, b-x0))");
  }
  const QuadResult left = integrate_real_segment(spec, spec.a(), spec.x0() - eps, cfg);
  const QuadResult right = integrate_real_segment(spec, spec.x0() + eps, spec.b(), cfg);
  QuadResult sum;
  sum.value = left.value + right.value;
  sum.err_estimate = std::hypot(left.err_estimate, right.err_estimate);
  sum.evals = left.evals + right.evals;
  sum.converged = left.converged && right.converged;
  sum.abs_integral = left.abs_integral + right.abs_integral;
  sum.subdivisions = left.subdivisions + right.subdivisions;
  return sum;
}

FoxResult fox_limit(const IntegralSpec& spec, const EpsSchedule& sched, const QuadConfig& cfg) {
  sched.validate(spec);
  FoxResult out;

  // Subtracting H_n cancels digits, so the samples and the c_k need more
  // accuracy than the result.
  QuadConfig sample_cfg = cfg;
  sample_cfg.rel_tol = std::min(cfg.rel_tol, 1e-13);
  sample_cfg.abs_tol = std::min(cfg.abs_tol, 1e-15);
  sample_cfg.max_subdivisions = std::max(cfg.max_subdivisions, 4000);

  const int n = spec.n();
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  std::vector<double> c_err(static_cast<std::size_t>(n), 0.0);
  if (n > 0) {
    const double r = default_circle_radius(spec);
    for (int k = 0; k < n; ++k) {
      const QuadResult q = cauchy_coefficient(spec, k, r, sample_cfg);
      c[static_cast<std::size_t>(k)] = q.value.real();
      c_err[static_cast<std::size_t>(k)] = q.err_estimate;
      out.evals += q.evals;
      out.converged = out.converged && q.converged;
    }
  }

  constexpr double unit = std::numeric_limits<double>::epsilon();
  std::vector<double> h, v, noise;
  for (double eps : sched.eps_values) {
    const QuadResult raw = raw_symmetric_sum(spec, eps, sample_cfg);
    out.evals += raw.evals;
    const double hn = divergent_part(c, n, eps);
    double h_err = 0.0;
    for (int k = 0; k < n; ++k) {
      const int m = n - k;
      if (m % 2 == 1) h_err += c_err[static_cast<std::size_t>(k)] * 2.0 / (m * std::pow(eps, m));
    }
    FoxSample s;
    s.eps = eps;
    s.raw = raw.value.real();
    s.divergent = hn;
    s.subtracted = s.raw - hn;
    s.noise = raw.err_estimate + h_err + 8.0 * unit * (raw.abs_integral + std::abs(hn));
    out.samples.push_back(s);
    h.push_back(eps);
    v.push_back(s.subtracted);
    noise.push_back(s.noise);
  }

  const auto ex = extrapolate_to_zero<double>(h, v, noise, sched.extrapolation_order);
  out.value = ex.value;
  out.err_estimate = ex.err_estimate;
  out.diverged = ex.diverged;
  return out;
}

TaylorCoeffs taylor_from_expr(const IntegralSpec& spec, int K, const QuadConfig& cfg) {
  if (K < 1) throw DomainError("need at least one Taylor coefficient");
  TaylorCoeffs t;
  const complex center{spec.x0(), 0.0};
  const double margin = default_margin(spec);
  const double dmin = nearest_pole_distance(spec.decl(), center);
  if (spec.decl().entire()) {
    t.radius_check = std::numeric_limits<double>::infinity();
  } else {
    // Only declared poles bound the radius; an empty declaration says nothing.
    t.radius_check = spec.decl().declared_poles().empty() ? 0.0 : dmin;
  }

  double r = 1.1 * spec.reach();
  if (std::isfinite(dmin) && dmin < r + margin) {
    r = dmin - margin;
    t.radius_warning = true;
  }
  if (!(r > 0.0)) {
    throw RegionError("no admissible circle radius for Taylor coefficients", complex{});
  }
  t.circle_radius = r;
  t.c.reserve(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    const QuadResult q = cauchy_coefficient(spec, k, r, cfg, margin);
    t.c.push_back(q.value.real());
    t.max_imag = std::max(t.max_imag, std::abs(q.value.imag()));
    t.evals += q.evals;
  }
  return t;
}

namespace {

void check_terms(const TaylorCoeffs& coeffs, int n, int K) {
  if (K < n + 2) throw DomainError("series needs K >= n + 2 terms");
  if (static_cast<std::size_t>(K) > coeffs.c.size()) {
    throw DomainError("series asks for " + std::to_string(K) + " terms but only " +
                      std::to_string(coeffs.c.size()) + " coefficients are available");
  }
}

void check_radius(const TaylorCoeffs& coeffs, const IntegralSpec& spec) {
  if (!(coeffs.radius_check > spec.reach())) {
    const std::string hint = spec.decl().declared_poles().empty()
                                 ? "declare f entire or list its poles"
                                 : "use a route other than series";
    throw RegionError("Taylor series about x0 has radius " + std::to_string(coeffs.radius_check) +
                          ", which does not cover [a, b] (needs > " + std::to_string(spec.reach()) +
                          "); " + hint,
                      complex{});
  }
}

}  // namespace

SeriesValue series_Fn(const TaylorCoeffs& coeffs, int n, double s, int K) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (static_cast<std::size_t>(K) > coeffs.c.size() || K < 0) {
    throw DomainError("series_Fn: K exceeds available coefficients");
  }
  if (s == 0.0 && n >= 1) throw DomainError("F_n(0) is singular for n >= 1");
  SeriesValue out;
  double sum = 0.0;
  for (int k = 0; k < std::min(n, K); ++k) {
    const double term = coeffs.c[static_cast<std::size_t>(k)] / ((n - k) * std::pow(s, n - k));
    sum -= term;
    out.last_term = std::abs(term);
  }
  for (int k = n + 1; k < K; ++k) {
    const double term = coeffs.c[static_cast<std::size_t>(k)] * std::pow(s, k - n) / (k - n);
    sum += term;
    out.last_term = std::abs(term);
  }
  out.value = sum;
  return out;
}

SeriesValue series_cpv(const TaylorCoeffs& coeffs, const IntegralSpec& spec, int K) {
  if (spec.n() != 0) throw DomainError("series_cpv is for n = 0; use series_fpi");
  return series_value(coeffs, spec, K);
}

SeriesValue series_fpi(const TaylorCoeffs& coeffs, const IntegralSpec& spec, int K) {
  if (spec.n() < 1) throw DomainError("series_fpi is for n >= 1; use series_cpv");
  return series_value(coeffs, spec, K);
}

SeriesValue series_value(const TaylorCoeffs& coeffs, const IntegralSpec& spec, int K) {
  const int n = spec.n();
  check_terms(coeffs, n, K);
  check_radius(coeffs, spec);
  const SeriesValue hi = series_Fn(coeffs, n, spec.b() - spec.x0(), K);
  const SeriesValue lo = series_Fn(coeffs, n, spec.a() - spec.x0(), K);
  const double log_term = coeffs.c[static_cast<std::size_t>(n)] *
                          (std::log(spec.b() - spec.x0()) - std::log(spec.x0() - spec.a()));
  return {hi.value - lo.value + log_term, std::max(hi.last_term, lo.last_term)};
}

}  // namespace apv
