#include "apv/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "apv/error.hpp"

namespace apv {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double cross(complex u, complex v) noexcept { return u.real() * v.imag() - u.imag() * v.real(); }

complex arc_point(const Arc& arc, double theta) noexcept {
  return arc.center + arc.radius * complex{std::cos(theta), std::sin(theta)};
}

// Does angle phi lie within the swept range of the arc (mod 2 pi)?
bool in_sweep(const Arc& arc, double phi, double tol) noexcept {
  const double lo = std::min(arc.theta_start, arc.theta_end);
  const double hi = std::max(arc.theta_start, arc.theta_end);
  if (hi - lo >= two_pi - tol) return true;
  const double k = std::ceil((lo - tol - phi) / two_pi);
  const double shifted = phi + k * two_pi;
  return shifted <= hi + tol;
}

}  // namespace

// ---------------------------------------------------------------------------
// Segment primitives

complex segment_start(const Segment& seg) noexcept {
  return std::visit(overloaded{[](const Line& l) { return l.from; },
                               [](const Arc& a) { return arc_point(a, a.theta_start); }},
                    seg);
}

complex segment_end(const Segment& seg) noexcept {
  return std::visit(overloaded{[](const Line& l) { return l.to; },
                               [](const Arc& a) { return arc_point(a, a.theta_end); }},
                    seg);
}

complex segment_point(const Segment& seg, double s) noexcept {
  return std::visit(
      overloaded{[&](const Line& l) { return l.from + s * (l.to - l.from); },
                 [&](const Arc& a) {
                   return arc_point(a, a.theta_start + s * (a.theta_end - a.theta_start));
                 }},
      seg);
}

complex segment_tangent(const Segment& seg, double s) noexcept {
  return std::visit(overloaded{[&](const Line& l) { return l.to - l.from; },
                               [&](const Arc& a) {
                                 const double sweep = a.theta_end - a.theta_start;
                                 const double theta = a.theta_start + s * sweep;
                                 return complex{0.0, 1.0} * a.radius *
                                        complex{std::cos(theta), std::sin(theta)} * sweep;
                               }},
                    seg);
}

bool segment_degenerate(const Segment& seg) noexcept {
  return std::visit(overloaded{[](const Line& l) { return l.from == l.to; },
                               [](const Arc& a) {
                                 return a.radius == 0.0 || a.theta_start == a.theta_end;
                               }},
                    seg);
}

double segment_length(const Segment& seg) noexcept {
  return std::visit(overloaded{[](const Line& l) { return std::abs(l.to - l.from); },
                               [](const Arc& a) {
                                 return a.radius * std::abs(a.theta_end - a.theta_start);
                               }},
                    seg);
}

double segment_distance(const Segment& seg, complex p) noexcept {
  return std::visit(
      overloaded{[&](const Line& l) {
                   const complex d = l.to - l.from;
                   const double len2 = std::norm(d);
                   if (len2 == 0.0) return std::abs(p - l.from);
                   const double t =
                       std::clamp((std::conj(d) * (p - l.from)).real() / len2, 0.0, 1.0);
                   return std::abs(p - (l.from + t * d));
                 },
                 [&](const Arc& a) {
                   const complex w = p - a.center;
                   const double ends =
                       std::min(std::abs(p - arc_point(a, a.theta_start)),
                                std::abs(p - arc_point(a, a.theta_end)));
                   if (w == complex{}) return a.radius;
                   if (in_sweep(a, std::arg(w), 0.0)) {
                     return std::min(ends, std::abs(std::abs(w) - a.radius));
                   }
                   return ends;
                 }},
      seg);
}

Segment segment_reversed(const Segment& seg) noexcept {
  return std::visit(overloaded{[](const Line& l) -> Segment { return Line{l.to, l.from}; },
                               [](const Arc& a) -> Segment {
                                 return Arc{a.center, a.radius, a.theta_end, a.theta_start};
                               }},
                    seg);
}

Segment segment_conjugate(const Segment& seg) noexcept {
  return std::visit(
      overloaded{[](const Line& l) -> Segment { return Line{std::conj(l.from), std::conj(l.to)}; },
                 [](const Arc& a) -> Segment {
                   return Arc{std::conj(a.center), a.radius, -a.theta_start, -a.theta_end};
                 }},
      seg);
}

namespace {

double line_arg_increment(complex from, complex to, complex p) noexcept {
  if (from == to) return 0.0;
  if (segment_distance(Line{from, to}, p) == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::arg((to - p) / (from - p));
}

// Arc piece with |sweep| <= pi/2: the arc plus the reversed chord is a closed
// loop winding sign(sweep) times around points of the circular segment
// between them, and zero times around everything else.
double arc_piece_arg_increment(const Arc& piece, complex p) noexcept {
  const complex s = arc_point(piece, piece.theta_start);
  const complex e = arc_point(piece, piece.theta_end);
  const double sweep = piece.theta_end - piece.theta_start;
  const complex mid = arc_point(piece, 0.5 * (piece.theta_start + piece.theta_end));
  const bool within_disk = std::abs(p - piece.center) < piece.radius;
  const double side_p = cross(e - s, p - s);
  const double side_m = cross(e - s, mid - s);
  if (within_disk && side_p == 0.0) {
    // p on the chord itself
    return std::copysign(pi, sweep);
  }
  const double chord = std::arg((e - p) / (s - p));
  const bool inside = within_disk && side_p * side_m > 0.0;
  return inside ? chord + std::copysign(two_pi, sweep) : chord;
}

}  // namespace

double segment_arg_increment(const Segment& seg, complex p) noexcept {
  if (segment_degenerate(seg)) return 0.0;
  if (segment_distance(seg, p) == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::visit(
      overloaded{[&](const Line& l) { return line_arg_increment(l.from, l.to, p); },
                 [&](const Arc& a) {
                   const double sweep = a.theta_end - a.theta_start;
                   const int pieces =
                       std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / (pi / 2))));
                   double total = 0.0;
                   for (int k = 0; k < pieces; ++k) {
                     const Arc piece{a.center, a.radius, a.theta_start + sweep * k / pieces,
                                     a.theta_start + sweep * (k + 1) / pieces};
                     total += arc_piece_arg_increment(piece, p);
                   }
                   return total;
                 }},
      seg);
}

std::string_view side_name(Side side) noexcept {
  switch (side) {
    case Side::above: return "above";
    case Side::below: return "below";
    case Side::invalid: return "invalid";
  }
  return "invalid";
}

Side side_from_name(std::string_view name) {
  if (name == "above") return Side::above;
  if (name == "below") return Side::below;
  throw DomainError("side must be \"above\" or \"below\", got \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------
// ComplexPath

ComplexPath::ComplexPath(std::vector<Segment> segments, Side side)
    : segments_(std::move(segments)), side_(side) {
  if (segments_.empty()) throw DomainError("a path needs at least one segment");
  if (side_ == Side::invalid) throw DomainError("a path must be tagged above or below");
  for (const auto& seg : segments_) {
    const bool finite = std::visit(
        overloaded{[](const Line& l) {
                     return std::isfinite(l.from.real()) && std::isfinite(l.from.imag()) &&
                            std::isfinite(l.to.real()) && std::isfinite(l.to.imag());
                   },
                   [](const Arc& a) {
                     return std::isfinite(a.center.real()) && std::isfinite(a.center.imag()) &&
                            std::isfinite(a.radius) && a.radius >= 0.0 &&
                            std::isfinite(a.theta_start) && std::isfinite(a.theta_end);
                   }},
        seg);
    if (!finite) throw DomainError("path segment has non-finite or negative parameters");
  }
  for (std::size_t k = 0; k + 1 < segments_.size(); ++k) {
    const complex e = segment_end(segments_[k]);
    const complex s = segment_start(segments_[k + 1]);
    const double tol = 1e-12 * std::max(1.0, std::max(std::abs(e), std::abs(s)));
    if (std::abs(e - s) > tol) {
      throw DomainError("path segments " + std::to_string(k) + " and " + std::to_string(k + 1) +
                        " do not join: " + format_complex(e) + " vs " + format_complex(s));
    }
  }
}

double ComplexPath::scale() const noexcept {
  double s = 0.0;
  for (const auto& seg : segments_) {
    s = std::max({s, std::abs(segment_start(seg)), std::abs(segment_end(seg))});
    if (const auto* a = std::get_if<Arc>(&seg)) s = std::max(s, std::abs(a->center) + a->radius);
  }
  return s;
}

double ComplexPath::distance_to(complex p) const noexcept {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& seg : segments_) d = std::min(d, segment_distance(seg, p));
  return d;
}

// ---------------------------------------------------------------------------
// Constructors

double min_pole_clearance(const IntegralSpec& spec) noexcept { return 1e-6 * spec.length(); }

namespace {

double sign_of(Side side) {
  if (side == Side::invalid) throw DomainError("requested side must be above or below");
  return side == Side::above ? 1.0 : -1.0;
}

// Arc of radius r about x0 from x0-r to x0+r over or under the pole.
Arc half_circle(double x0, double r, Side side) {
  return Arc{complex{x0, 0.0}, r, sign_of(side) * pi, 0.0};
}

ComplexPath indented_path(const IntegralSpec& spec, double r, Side side,
                          std::optional<double> margin) {
  std::vector<Segment> segs;
  const double a = spec.a(), b = spec.b(), x0 = spec.x0();
  if (x0 - r > a) segs.emplace_back(Line{complex{a, 0.0}, complex{x0 - r, 0.0}});
  segs.emplace_back(half_circle(x0, r, side));
  if (x0 + r < b) segs.emplace_back(Line{complex{x0 + r, 0.0}, complex{b, 0.0}});
  ComplexPath path(std::move(segs), side);
  check_pole_clearance(path, spec, margin.value_or(default_margin(spec)));
  return path;
}

}  // namespace

ComplexPath semicircle_path(const IntegralSpec& spec, double eps, Side side,
                            std::optional<double> margin) {
  sign_of(side);
  if (!(eps > 0.0) || !(eps < spec.pole_gap())) {
    throw DomainError("semicircle eps = " + std::to_string(eps) + " outside (0, " +
                      std::to_string(spec.pole_gap()) + ")");
  }
  if (eps < min_pole_clearance(spec)) {
    throw DomainError("semicircle eps below the clearance floor 1e-6 (b - a)");
  }
  return indented_path(spec, eps, side, margin);
}

ComplexPath semicircle_bulge_path(const IntegralSpec& spec, double radius, Side side,
                                  std::optional<double> margin) {
  sign_of(side);
  const double gap = spec.pole_gap();
  const double tol = 1e-12 * std::max(1.0, spec.reach());
  if (!(radius > 0.0) || radius > gap + tol) {
    throw DomainError("bulge radius " + std::to_string(radius) + " incompatible with interval (max " +
                      std::to_string(gap) + ")");
  }
  if (radius < min_pole_clearance(spec)) {
    throw DomainError("bulge radius below the clearance floor 1e-6 (b - a)");
  }
  std::vector<Segment> segs;
  const double a = spec.a(), b = spec.b(), x0 = spec.x0();
  const bool touches_a = std::abs((x0 - radius) - a) <= tol;
  const bool touches_b = std::abs((x0 + radius) - b) <= tol;
  if (!touches_a) segs.emplace_back(Line{complex{a, 0.0}, complex{x0 - radius, 0.0}});
  segs.emplace_back(half_circle(x0, radius, side));
  if (!touches_b) segs.emplace_back(Line{complex{x0 + radius, 0.0}, complex{b, 0.0}});
  ComplexPath path(std::move(segs), side);
  check_pole_clearance(path, spec, margin.value_or(default_margin(spec)));
  return path;
}

ComplexPath rectangle_path(const IntegralSpec& spec, double height, Side side,
                           std::optional<double> margin) {
  const double s = sign_of(side);
  if (!(height > 0.0) || !std::isfinite(height)) throw DomainError("rectangle height must be > 0");
  const complex a{spec.a(), 0.0}, b{spec.b(), 0.0}, up{0.0, s * height};
  ComplexPath path({Line{a, a + up}, Line{a + up, b + up}, Line{b + up, b}}, side);
  check_pole_clearance(path, spec, margin.value_or(default_margin(spec)));
  return path;
}

ComplexPath default_path(const IntegralSpec& spec, Side side) {
  double eps = 0.5 * spec.pole_gap();
  const double d = nearest_pole_distance(spec.decl(), complex{spec.x0(), 0.0});
  const double margin = default_margin(spec);
  if (std::isfinite(d) && eps + margin > d) eps = std::max(0.5 * (d - margin), min_pole_clearance(spec));
  return semicircle_path(spec, eps, side);
}

ComplexPath mirror_path(const ComplexPath& path) {
  std::vector<Segment> segs;
  segs.reserve(path.segments().size());
  for (const auto& seg : path.segments()) segs.push_back(segment_conjugate(seg));
  const Side side = path.side() == Side::above ? Side::below : Side::above;
  return ComplexPath(std::move(segs), side);
}

ComplexPath reversed_path(const ComplexPath& path) {
  std::vector<Segment> segs;
  segs.reserve(path.segments().size());
  for (auto it = path.segments().rbegin(); it != path.segments().rend(); ++it) {
    segs.push_back(segment_reversed(*it));
  }
  return ComplexPath(std::move(segs), path.side());
}

// ---------------------------------------------------------------------------
// Winding and side classification

double winding_number(std::span<const Segment> segments, complex p) {
  double total = 0.0;
  for (const auto& seg : segments) total += segment_arg_increment(seg, p);
  return total / two_pi;
}

Side classify_side(const ComplexPath& path, double x0) {
  const complex s = path.start(), e = path.end();
  const double scale = std::max(1.0, path.scale());
  const double tol = 1e-12 * scale;
  if (std::abs(s.imag()) > tol || std::abs(e.imag()) > tol) return Side::invalid;
  if (!(s.real() < x0 && x0 < e.real())) return Side::invalid;
  if (path.distance_to(complex{x0, 0.0}) <= 1e-14 * scale) return Side::invalid;

  double increment = 0.0;
  for (const auto& seg : path.segments()) increment += segment_arg_increment(seg, complex{x0, 0.0});
  if (!std::isfinite(increment)) return Side::invalid;
  // Return leg b -> a passing under x0 contributes -pi.
  const double w = (increment - pi) / two_pi;
  const double rounded = std::round(w);
  if (std::abs(w - rounded) > 0.1) return Side::invalid;
  if (self_intersects(path)) return Side::invalid;
  if (rounded == -1.0) return Side::above;
  if (rounded == 0.0) return Side::below;
  return Side::invalid;
}

// ---------------------------------------------------------------------------
// Self-intersection

namespace {

struct Hit {
  complex point;
};

void line_line_hits(const Line& p, const Line& q, double tol, std::vector<Hit>& out) {
  const complex r = p.to - p.from, s = q.to - q.from;
  const double denom = cross(r, s);
  const complex qp = q.from - p.from;
  if (std::abs(denom) <= 1e-14 * std::abs(r) * std::abs(s)) {
    if (std::abs(cross(qp, r)) > tol * std::abs(r)) return;  // parallel, disjoint
    // Collinear: overlap of projections onto r.
    const double rr = std::norm(r);
    if (rr == 0.0) return;
    double t0 = (std::conj(r) * (q.from - p.from)).real() / rr;
    double t1 = (std::conj(r) * (q.to - p.from)).real() / rr;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
    if (lo <= hi) {
      out.push_back({p.from + lo * r});
      if (hi > lo) out.push_back({p.from + hi * r});
    }
    return;
  }
  const double t = cross(qp, s) / denom;
  const double u = cross(qp, r) / denom;
  const double et = tol / std::max(std::abs(r), 1e-300);
  const double eu = tol / std::max(std::abs(s), 1e-300);
  if (t >= -et && t <= 1 + et && u >= -eu && u <= 1 + eu) out.push_back({p.from + t * r});
}

void line_arc_hits(const Line& l, const Arc& a, double tol, std::vector<Hit>& out) {
  const complex d = l.to - l.from;
  const complex f = l.from - a.center;
  const double A = std::norm(d);
  if (A == 0.0) return;
  const double B = 2.0 * (std::conj(d) * f).real();
  const double C = std::norm(f) - a.radius * a.radius;
  double disc = B * B - 4 * A * C;
  const double disc_tol = 4 * A * 2 * a.radius * tol;
  if (disc < -disc_tol) return;
  disc = std::max(disc, 0.0);
  const double sq = std::sqrt(disc);
  const double et = tol / std::sqrt(A);
  for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
    if (t < -et || t > 1 + et) continue;
    const complex z = l.from + t * d;
    if (in_sweep(a, std::arg(z - a.center), tol / std::max(a.radius, 1e-300))) out.push_back({z});
  }
}

void arc_arc_hits(const Arc& p, const Arc& q, double tol, std::vector<Hit>& out) {
  const complex dc = q.center - p.center;
  const double d = std::abs(dc);
  const double atol_p = tol / std::max(p.radius, 1e-300);
  const double atol_q = tol / std::max(q.radius, 1e-300);
  if (d <= tol && std::abs(p.radius - q.radius) <= tol) {
    // Same circle: overlapping sweeps intersect along an arc. Report the
    // endpoints of q that lie on p and vice versa.
    for (double th : {q.theta_start, q.theta_end}) {
      if (in_sweep(p, th, atol_p)) out.push_back({arc_point(q, th)});
    }
    for (double th : {p.theta_start, p.theta_end}) {
      if (in_sweep(q, th, atol_q)) out.push_back({arc_point(p, th)});
    }
    // Interior overlap: midpoints of each lying on the other.
    const double pm = 0.5 * (p.theta_start + p.theta_end);
    const double qm = 0.5 * (q.theta_start + q.theta_end);
    if (in_sweep(q, pm, atol_q)) out.push_back({arc_point(p, pm)});
    if (in_sweep(p, qm, atol_p)) out.push_back({arc_point(q, qm)});
    return;
  }
  if (d == 0.0) return;
  if (d > p.radius + q.radius + tol || d < std::abs(p.radius - q.radius) - tol) return;
  const double x = (d * d + p.radius * p.radius - q.radius * q.radius) / (2 * d);
  const double h = std::sqrt(std::max(0.0, p.radius * p.radius - x * x));
  const complex e = dc / d;
  const complex base = p.center + x * e;
  const complex perp{-e.imag(), e.real()};
  for (double sgn : {-1.0, 1.0}) {
    const complex z = base + sgn * h * perp;
    if (in_sweep(p, std::arg(z - p.center), atol_p) &&
        in_sweep(q, std::arg(z - q.center), atol_q)) {
      out.push_back({z});
    }
    if (h == 0.0) break;
  }
}

std::vector<Hit> hits(const Segment& s1, const Segment& s2, double tol) {
  std::vector<Hit> out;
  std::visit(overloaded{[&](const Line& p, const Line& q) { line_line_hits(p, q, tol, out); },
                        [&](const Line& p, const Arc& q) { line_arc_hits(p, q, tol, out); },
                        [&](const Arc& p, const Line& q) { line_arc_hits(q, p, tol, out); },
                        [&](const Arc& p, const Arc& q) { arc_arc_hits(p, q, tol, out); }},
             s1, s2);
  return out;
}

}  // namespace

bool self_intersects(const ComplexPath& path) {
  const auto& segs = path.segments();
  const double tol = 1e-10 * std::max(1.0, path.scale());
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (segment_degenerate(segs[k])) continue;
    if (const auto* a = std::get_if<Arc>(&segs[k])) {
      if (std::abs(a->theta_end - a->theta_start) >= two_pi) return true;
    }
    live.push_back(k);
  }
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      const auto& si = segs[live[i]];
      const auto& sj = segs[live[j]];
      const bool adjacent = j == i + 1;
      const complex joint = segment_end(si);
      for (const auto& hit : hits(si, sj, tol)) {
        if (adjacent && std::abs(hit.point - joint) <= 1e3 * tol) continue;
        return true;
      }
      if (adjacent) {
        // Overlap running back along the previous piece shows up as a hit at
        // the joint only; catch it through the tangent directions.
        const complex t_out = segment_tangent(sj, 0.0);
        const complex t_in = segment_tangent(si, 1.0);
        if (std::abs(cross(t_in, t_out)) <= 1e-12 * std::abs(t_in) * std::abs(t_out) &&
            (std::conj(t_in) * t_out).real() < 0.0) {
          return true;
        }
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Pole checks

void check_pole_clearance(const ComplexPath& path, const IntegralSpec& spec, double margin) {
  if (auto v = validate_region(spec.decl(), spec, margin)) {
    throw RegionError("declared pole " + format_complex(v->pole) + " lies within margin " +
                          std::to_string(margin) + " of [a, b] (distance " +
                          std::to_string(v->distance) + ")",
                      v->pole);
  }
  std::vector<Segment> loop = path.segments();
  loop.emplace_back(Line{path.end(), path.start()});
  for (const auto& pole : spec.decl().declared_poles()) {
    const double d = path.distance_to(pole);
    if (d < margin) {
      throw RegionError("path passes within " + std::to_string(d) + " of declared pole " +
                            format_complex(pole) + " (margin " + std::to_string(margin) + ")",
                        pole);
    }
    const double w = winding_number(loop, pole);
    if (!std::isfinite(w) || std::abs(w) > 0.5) {
      throw RegionError("declared pole " + format_complex(pole) +
                            " lies between the path and the real segment",
                        pole);
    }
  }
}

void validate_path(const ComplexPath& path, const IntegralSpec& spec, Side expected,
                   std::optional<double> margin) {
  const complex a{spec.a(), 0.0}, b{spec.b(), 0.0};
  const double tol = 1e-12 * std::max(1.0, spec.reach() + std::abs(spec.x0()));
  if (std::abs(path.start() - a) > tol || std::abs(path.end() - b) > tol) {
    throw DomainError("path must run from a = " + std::to_string(spec.a()) + " to b = " +
                      std::to_string(spec.b()));
  }
  const Side side = classify_side(path, spec.x0());
  if (side == Side::invalid) {
    throw SideError("path is not admissible: it touches x0, self-intersects or winds around it");
  }
  if (side != expected || side != path.side()) {
    throw SideError("path passes " + std::string(side_name(side)) + " x0 but " +
                    std::string(side_name(expected)) + " was required (tagged " +
                    std::string(side_name(path.side())) + ")");
  }
  if (path.distance_to(complex{spec.x0(), 0.0}) < min_pole_clearance(spec)) {
    throw DomainError("path comes closer to x0 than the clearance floor 1e-6 (b - a)");
  }
  check_pole_clearance(path, spec, margin.value_or(default_margin(spec)));
}

}  // namespace apv
