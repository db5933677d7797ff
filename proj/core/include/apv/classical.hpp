#pragma once

// Classical definitions used as independent oracles: the symmetric epsilon
// limit with the divergent terms subtracted, and the term-by-term Taylor
// series of the principal value / finite part.

#include <vector>

#include "apv/quadrature.hpp"

namespace apv {

struct EpsSchedule {
  std::vector<double> eps_values;
  int extrapolation_order = 6;

  /// eps_k = eps0 2^-k, eps0 = min(x0-a, b-x0)/4, twelve terms.
  static EpsSchedule defaults(const IntegralSpec& spec);
  /// Throws DomainError unless strictly decreasing, positive and < min(x0-a, b-x0).
  void validate(const IntegralSpec& spec) const;
};

struct FoxSample {
  double eps;
  /// Integral over [a, x0-eps] plus [x0+eps, b].
  double raw;
  /// H_n(x0, eps)
  double divergent;
  /// raw - divergent
  double subtracted;
  double noise;
};

struct FoxResult {
  double value = 0.0;
  double err_estimate = 0.0;
  bool diverged = false;
  bool converged = true;
  long evals = 0;
  std::vector<FoxSample> samples;
};

/// H_n(x0, eps) = sum_{k<n} c_k/(n-k) (1 - (-1)^(n-k)) / eps^(n-k) with
/// c_k = f^(k)(x0)/k!.
double divergent_part(std::span<const double> taylor, int n, double eps);

/// Integral over [a, x0-eps] and [x0+eps, b] with nothing subtracted.
QuadResult raw_symmetric_sum(const IntegralSpec& spec, double eps, const QuadConfig& cfg);

/// CPV (n = 0) or finite part (n >= 1) as the extrapolated eps -> 0 limit of
/// raw_symmetric_sum - H_n. The c_k for k < n come from Cauchy circles. The
/// samples and c_k are integrated at rel_tol <= 1e-13 and abs_tol <= 1e-15 whatever cfg says.
FoxResult fox_limit(const IntegralSpec& spec, const EpsSchedule& sched, const QuadConfig& cfg);

struct TaylorCoeffs {
  std::vector<double> c;
  /// Radius of convergence about x0: infinite for entire f, otherwise the
  /// distance to the nearest declared pole. Series routes need it to exceed
  /// max(|a-x0|, |b-x0|).
  double radius_check = 0.0;
  /// Radius of the Cauchy circle the coefficients were computed on.
  double circle_radius = 0.0;
  /// True when the circle had to be shrunk below 1.1 max(|a-x0|, |b-x0|).
  bool radius_warning = false;
  /// Largest |Im c_k| seen (f not real on the axis if this is large).
  double max_imag = 0.0;
  long evals = 0;
};

/// c_k = f^(k)(x0)/k!, k = 0..K-1, by Cauchy-circle quadrature.
TaylorCoeffs taylor_from_expr(const IntegralSpec& spec, int K, const QuadConfig& cfg);

struct SeriesValue {
  double value = 0.0;
  /// Magnitude of the last term included; a truncation indicator.
  double last_term = 0.0;
};

/// F_n(s) = -sum_{k<n} c_k/((n-k) s^(n-k)) + sum_{n<k<K} c_k s^(k-n)/(k-n).
SeriesValue series_Fn(const TaylorCoeffs& coeffs, int n, double s, int K);

/// Cauchy principal value (n = 0) by the Taylor series.
SeriesValue series_cpv(const TaylorCoeffs& coeffs, const IntegralSpec& spec, int K);

/// Finite-part integral (n >= 1) by the Taylor series.
SeriesValue series_fpi(const TaylorCoeffs& coeffs, const IntegralSpec& spec, int K);

/// series_cpv or series_fpi depending on n.
SeriesValue series_value(const TaylorCoeffs& coeffs, const IntegralSpec& spec, int K);

inline constexpr int default_taylor_terms = 64;

}  // namespace apv
