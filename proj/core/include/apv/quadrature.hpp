#pragma once

#include <functional>
#include <span>
#include <vector>

#include "apv/contour.hpp"

namespace apv {

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  /// Throws DomainError unless rel_tol > 0, abs_tol > 0, max_subdivisions >= 1.
  void validate() const;
};

struct QuadResult {
  complex value{};
  /// Root-sum-square of the per-interval Kronrod/Gauss differences, floored
  /// by the roundoff level of each interval.
  double err_estimate = 0.0;
  long evals = 0;
  bool converged = true;
  /// Integral of |g(z)| |dz| along the path. Finite for every admissible
  /// path; also sets the roundoff scale of the result.
  double abs_integral = 0.0;
  int subdivisions = 0;
};

using ComplexFunction = std::function<complex(complex)>;

/// One piece of work: segment restricted to s in [lo, hi].
struct SegmentPiece {
  Segment segment;
  double lo = 0.0;
  double hi = 1.0;
};

/// Globally adaptive G7/K15 integration of g(z) dz over the pieces. The
/// interval with the largest error is bisected until the combined estimate
/// drops below max(abs_tol, rel_tol |value|) or max_subdivisions is reached
/// (then converged = false and the best value is returned). A result whose
/// intervals all sit at their roundoff floor also counts as converged, which
/// matters for integrals that vanish. Summation order
/// is fixed, so the result is reproducible bit for bit. Exceptions thrown by
/// g (EvalError) propagate.
QuadResult integrate_pieces(const ComplexFunction& g, std::span<const SegmentPiece> pieces,
                            const QuadConfig& cfg);

/// Splits every segment at points clustered geometrically around the point
/// nearest to `focus` (distance d, then 2d, 4d, ...) before integrating.
QuadResult integrate_segments(const ComplexFunction& g, std::span<const Segment> segments,
                              const QuadConfig& cfg, std::optional<complex> focus = std::nullopt);

/// Integral of f(z) / (z - x0)^(n+1) along the path.
QuadResult integrate_path(const IntegralSpec& spec, const ComplexPath& path, const QuadConfig& cfg);

/// Integral of f(x) / (x - x0)^(n+1) over the real interval [lo, hi], which
/// must exclude x0 (DomainError otherwise). lo > hi integrates backwards.
QuadResult integrate_real_segment(const IntegralSpec& spec, double lo, double hi,
                                  const QuadConfig& cfg);

/// Split points in (0, 1) for a segment, clustered around the point nearest
/// to `focus`.
std::vector<double> clustered_splits(const Segment& seg, complex focus);

}  // namespace apv
