#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "apv/integral_spec.hpp"

namespace apv {

struct Line {
  complex from;
  complex to;
};

/// z(theta) = center + radius * e^{i theta}, theta running theta_start -> theta_end.
struct Arc {
  complex center;
  double radius;
  double theta_start;
  double theta_end;
};

using Segment = std::variant<Line, Arc>;

// Every segment is parameterized over s in [0, 1]; arcs by angle, so dz/ds is
// i r e^{i theta} (theta_end - theta_start).
complex segment_start(const Segment& seg) noexcept;
complex segment_end(const Segment& seg) noexcept;
complex segment_point(const Segment& seg, double s) noexcept;
complex segment_tangent(const Segment& seg, double s) noexcept;
bool segment_degenerate(const Segment& seg) noexcept;
double segment_length(const Segment& seg) noexcept;
double segment_distance(const Segment& seg, complex p) noexcept;
Segment segment_reversed(const Segment& seg) noexcept;
Segment segment_conjugate(const Segment& seg) noexcept;
/// Increment of arg(z - p) along the segment; NaN if the segment hits p.
double segment_arg_increment(const Segment& seg, complex p) noexcept;

enum class Side { above, below, invalid };

std::string_view side_name(Side side) noexcept;
/// Throws DomainError for anything other than "above" / "below".
Side side_from_name(std::string_view name);

/// Piecewise-smooth path of lines and arcs. Construction checks that the
/// pieces join continuously; endpoint and side checks are separate because a
/// reversed or closed loop is still a useful path for quadrature.
class ComplexPath {
 public:
  ComplexPath(std::vector<Segment> segments, Side side);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  Side side() const noexcept { return side_; }
  complex start() const noexcept { return segment_start(segments_.front()); }
  complex end() const noexcept { return segment_end(segments_.back()); }

  /// Largest |z| over the segment endpoints and arc extents.
  double scale() const noexcept;
  double distance_to(complex p) const noexcept;

 private:
  std::vector<Segment> segments_;
  Side side_;
};

/// Line(a, x0-eps), arc of radius eps over (above) or under (below) x0, Line(x0+eps, b).
/// Requires 1e-6 (b-a) <= eps < min(x0-a, b-x0) and no declared pole inside the
/// indentation or within `margin` of the path.
ComplexPath semicircle_path(const IntegralSpec& spec, double eps, Side side,
                            std::optional<double> margin = std::nullopt);

/// Semicircle of the given radius centered at x0, joined to a and b by real
/// segments where needed; a single arc when radius == x0-a == b-x0.
ComplexPath semicircle_bulge_path(const IntegralSpec& spec, double radius, Side side,
                                  std::optional<double> margin = std::nullopt);

/// Three lines: a -> a+ih -> b+ih -> b (h negated for below).
ComplexPath rectangle_path(const IntegralSpec& spec, double height, Side side,
                           std::optional<double> margin = std::nullopt);

/// semicircle_path with eps = min(x0-a, b-x0)/2, halved toward x0 when a
/// declared pole would otherwise come within the margin of the arc.
ComplexPath default_path(const IntegralSpec& spec, Side side);

/// Mirror image in the real axis; swaps the side.
ComplexPath mirror_path(const ComplexPath& path);

/// Same points traversed b -> a.
ComplexPath reversed_path(const ComplexPath& path);

/// Sum of arg increments of (z - p) over the segments divided by 2 pi; only an
/// integer for closed loops.
double winding_number(std::span<const Segment> segments, complex p);

/// Pairwise exact line/arc intersection tests, ignoring the joints shared by
/// consecutive pieces.
bool self_intersects(const ComplexPath& path);

/// Side of x0 the path passes. The loop formed by the path and the real
/// return b -> a, indented below x0, winds -1 times around x0 for a path
/// above and 0 times for a path below, which makes gamma- minus gamma+ wind
/// once counterclockwise. Invalid on: non-real or misordered endpoints, a
/// path touching x0, a fractional winding part above 0.1, any other integer
/// winding, or self-intersection.
Side classify_side(const ComplexPath& path, double x0);

/// Throws RegionError if a declared pole is closer than `margin` to the path
/// or sits between the path and the real segment [a, b].
void check_pole_clearance(const ComplexPath& path, const IntegralSpec& spec, double margin);

/// Full admissibility check used before integrating: endpoints a and b,
/// classified side equals both `expected` and path.side(), clearance of
/// 1e-6 (b-a) from x0 and the pole clearance above. Throws SideError /
/// DomainError / RegionError.
void validate_path(const ComplexPath& path, const IntegralSpec& spec, Side expected,
                   std::optional<double> margin = std::nullopt);

/// Implementation floor on how close an admissible path may come to x0.
double min_pole_clearance(const IntegralSpec& spec) noexcept;

}  // namespace apv
