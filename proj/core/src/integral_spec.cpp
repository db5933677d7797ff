#include "apv/integral_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "apv/error.hpp"

namespace apv {

IntegralSpec::IntegralSpec(Expr f, AnalyticityDecl decl, double a, double b, double x0, int n)
    : f_(std::move(f)), decl_(std::move(decl)), a_(a), b_(b), x0_(x0), n_(n) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x0)) {
    throw DomainError("interval endpoints and x0 must be finite");
  }
  if (!(a < x0 && x0 < b)) {
    throw DomainError("require a < x0 < b, got a=" + std::to_string(a) + ", x0=" +
                      std::to_string(x0) + ", b=" + std::to_string(b));
  }
  if (n < 0) throw DomainError("order n must be nonnegative");
}

double IntegralSpec::pole_gap() const noexcept { return std::min(x0_ - a_, b_ - x0_); }
double IntegralSpec::reach() const noexcept { return std::max(x0_ - a_, b_ - x0_); }

complex IntegralSpec::integrand(complex z) const {
  const complex w = z - x0_;
  complex denom = w;
  for (int k = 0; k < n_; ++k) denom *= w;
  if (denom == complex{}) throw EvalError(z, "(z - x0)^(n+1)");
  return f_.eval(z) / denom;
}

void IntegralSpec::set_margin(double margin) {
  if (!(margin > 0.0) || !std::isfinite(margin)) throw DomainError("margin must be positive and finite");
  margin_ = margin;
}

double default_margin(const IntegralSpec& spec) noexcept {
  return spec.margin().value_or(std::max(spec.length(), 1.0) * 1e-2);
}

double distance_to_segment(complex p, double lo, double hi) noexcept {
  const double x = std::clamp(p.real(), lo, hi);
  return std::abs(p - complex{x, 0.0});
}

double nearest_pole_distance(const AnalyticityDecl& decl, complex center) noexcept {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : decl.declared_poles()) d = std::min(d, std::abs(p - center));
  return d;
}

std::optional<RegionViolation> validate_region(const AnalyticityDecl& decl, const IntegralSpec& spec,
                                               double margin) {
  std::optional<RegionViolation> worst;
  for (const auto& p : decl.declared_poles()) {
    const double d = distance_to_segment(p, spec.a(), spec.b());
    if (d < margin && (!worst || d < worst->distance)) worst = RegionViolation{p, d};
  }
  return worst;
}

}  // namespace apv
