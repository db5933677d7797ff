#pragma once

// Boundary values of Phi(z) = int_a^b f(x) / (x - z)^(n+1) dx as z approaches
// x0 from above and below the real axis.

#include <vector>

#include "apv/quadrature.hpp"

namespace apv {

/// Phi(z) along the straight segment [a, b]. z must not lie on [a, b]
/// (DomainError). The segment is pre-split around Re z at |Im z|, 2|Im z|, ...
QuadResult phi_at(const IntegralSpec& spec, complex z, const QuadConfig& cfg);

struct BoundarySample {
  double y;
  complex plus;   // Phi(x0 + iy)
  complex minus;  // Phi(x0 - iy)
};

struct BoundaryReport {
  complex phi_plus{};
  complex phi_minus{};
  std::vector<BoundarySample> y_samples;
  double extrapolation_err = 0.0;
  bool diverged = false;
  long evals = 0;
};

struct YSchedule {
  std::vector<double> y_values;
  int extrapolation_order = 4;

  /// Geometric, ratio 1/2, from (b-a)/8 down to the last value >= (b-a) 1e-4.
  static YSchedule defaults(const IntegralSpec& spec);
  /// Positive, strictly decreasing, smallest >= 1e-4 (b-a); DomainError otherwise.
  void validate(const IntegralSpec& spec) const;
};

/// Extrapolates Phi(x0 +- iy) to y = 0 separately for each sign.
BoundaryReport boundary_values(const IntegralSpec& spec, const YSchedule& schedule,
                               const QuadConfig& cfg);

struct SpfIdentity {
  double max_abs_diff = 0.0;
  double diff_plus = 0.0;   // |Phi+ - Int-|
  double diff_minus = 0.0;  // |Phi- - Int+|
  complex int_plus{};
  complex int_minus{};
  BoundaryReport boundary;
};

/// Compares the boundary values against the opposite-side path integrals.
SpfIdentity spf_identity_check(const IntegralSpec& spec, const ComplexPath& path_plus,
                               const ComplexPath& path_minus, const YSchedule& schedule,
                               const QuadConfig& cfg);

}  // namespace apv
