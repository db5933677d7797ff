#include "apv/spf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "apv/error.hpp"
#include "apv/extrapolation.hpp"

namespace apv {

QuadResult phi_at(const IntegralSpec& spec, complex z, const QuadConfig& cfg) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("z must be finite");
  if (z.imag() == 0.0 && spec.a() <= z.real() && z.real() <= spec.b()) {
    throw DomainError("Phi(z) is undefined for z on [a, b]");
  }
  const int n = spec.n();
  const Expr& f = spec.f();
  auto g = [&](complex x) {
    const complex w = x - z;
    complex denom = w;
    for (int k = 0; k < n; ++k) denom *= w;
    return f.eval(x) / denom;
  };
  const Segment seg = Line{complex{spec.a(), 0.0}, complex{spec.b(), 0.0}};
  return integrate_segments(g, std::span<const Segment>(&seg, 1), cfg, z);
}

YSchedule YSchedule::defaults(const IntegralSpec& spec) {
  YSchedule s;
  const double len = spec.length();
  for (double y = len / 8.0; y >= 1e-4 * len; y *= 0.5) s.y_values.push_back(y);
  return s;
}

void YSchedule::validate(const IntegralSpec& spec) const {
  if (y_values.empty()) throw DomainError("y schedule is empty");
  if (extrapolation_order < 0) throw DomainError("extrapolation order must be >= 0");
  const double floor = 1e-4 * spec.length();
  for (std::size_t k = 0; k < y_values.size(); ++k) {
    const double y = y_values[k];
    if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("y schedule entries must be positive");
    if (k > 0 && !(y < y_values[k - 1])) throw DomainError("y schedule must be strictly decreasing");
    if (y < floor * (1.0 - 1e-12)) {
      throw DomainError("y schedule entry " + std::to_string(y) + " below the floor 1e-4 (b - a)");
    }
  }
}

BoundaryReport boundary_values(const IntegralSpec& spec, const YSchedule& schedule,
                               const QuadConfig& cfg) {
  schedule.validate(spec);
  BoundaryReport out;
  constexpr double unit = std::numeric_limits<double>::epsilon();
  std::vector<double> h, noise_p, noise_m;
  std::vector<complex> vp, vm;
  for (double y : schedule.y_values) {
    const QuadResult p = phi_at(spec, complex{spec.x0(), y}, cfg);
    const QuadResult m = phi_at(spec, complex{spec.x0(), -y}, cfg);
    out.evals += p.evals + m.evals;
    out.y_samples.push_back({y, p.value, m.value});
    h.push_back(y);
    vp.push_back(p.value);
    vm.push_back(m.value);
    noise_p.push_back(p.err_estimate + 8.0 * unit * p.abs_integral);
    noise_m.push_back(m.err_estimate + 8.0 * unit * m.abs_integral);
  }
  const auto ep = extrapolate_to_zero<complex>(h, vp, noise_p, schedule.extrapolation_order);
  const auto em = extrapolate_to_zero<complex>(h, vm, noise_m, schedule.extrapolation_order);
  out.phi_plus = ep.value;
  out.phi_minus = em.value;
  out.extrapolation_err = std::max(ep.err_estimate, em.err_estimate);
  out.diverged = ep.diverged || em.diverged;
  return out;
}

SpfIdentity spf_identity_check(const IntegralSpec& spec, const ComplexPath& path_plus,
                               const ComplexPath& path_minus, const YSchedule& schedule,
                               const QuadConfig& cfg) {
  validate_path(path_plus, spec, Side::above);
  validate_path(path_minus, spec, Side::below);
  SpfIdentity out;
  out.int_plus = integrate_path(spec, path_plus, cfg).value;
  out.int_minus = integrate_path(spec, path_minus, cfg).value;
  out.boundary = boundary_values(spec, schedule, cfg);
  out.diff_plus = std::abs(out.boundary.phi_plus - out.int_minus);
  out.diff_minus = std::abs(out.boundary.phi_minus - out.int_plus);
  out.max_abs_diff = std::max(out.diff_plus, out.diff_minus);
  return out;
}

}  // namespace apv
