#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apv/quadrature.hpp"

namespace apv {

enum class Route { average, upper, lower };

std::string_view route_name(Route route) noexcept;

struct NamedQuad {
  std::string name;
  QuadResult result;
};

/// Analytic principal value of one spec by one route.
struct ApvReport {
  /// Real part of the route's value; that is the APV for f real on [a, b].
  double value = 0.0;
  /// Imaginary part of the route's value, kept as a health indicator.
  double imag_residual = 0.0;
  std::optional<complex> int_plus;
  std::optional<complex> int_minus;
  /// f^(n)(x0) / n! from the Cauchy circle.
  complex residue_term{};
  Route route = Route::average;
  double err_estimate = 0.0;
  long evals = 0;
  bool converged = true;
  std::vector<NamedQuad> diagnostics;
};

/// Default Cauchy-circle radius: min(x0-a, b-x0)/2, shrunk so the circle
/// keeps `margin` from every declared pole. Throws RegionError if nothing is
/// left.
double default_circle_radius(const IntegralSpec& spec, std::optional<double> margin = std::nullopt);

/// (1 / 2 pi i) times the integral of f(z)/(z-x0)^(k+1) around |z-x0| = radius,
/// i.e. the Taylor coefficient f^(k)(x0)/k!. Throws RegionError if a pole is
/// within radius + margin of x0.
QuadResult cauchy_coefficient(const IntegralSpec& spec, int k, double radius, const QuadConfig& cfg,
                              std::optional<double> margin = std::nullopt);

/// f^(n)(x0)/n! for the integral's own n.
complex derivative_at_pole(const IntegralSpec& spec, double circle_radius, const QuadConfig& cfg);

/// (Int+ + Int-)/2 over the two paths.
ApvReport apv_average(const IntegralSpec& spec, const ComplexPath& path_plus,
                      const ComplexPath& path_minus, const QuadConfig& cfg);

/// Int+ + i pi f^(n)(x0)/n!
ApvReport apv_upper(const IntegralSpec& spec, const ComplexPath& path_plus, const QuadConfig& cfg);

/// Int- - i pi f^(n)(x0)/n!
ApvReport apv_lower(const IntegralSpec& spec, const ComplexPath& path_minus, const QuadConfig& cfg);

struct JumpCheck {
  complex lhs;  // Int- - Int+
  complex rhs;  // 2 pi i f^(n)(x0)/n!
  double abs_diff = 0.0;
  double err_estimate = 0.0;
};

JumpCheck jump_relation_check(const IntegralSpec& spec, const ComplexPath& path_plus,
                              const ComplexPath& path_minus, const QuadConfig& cfg);

}  // namespace apv
