#include "apv/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "apv/error.hpp"

namespace apv {

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1) {
    throw DomainError("quadrature config needs rel_tol > 0, abs_tol > 0, max_subdivisions >= 1");
  }
}

namespace {

// 15-point Kronrod abscissae on [-1, 1] (nonnegative half) and weights; the
// odd-indexed nodes are the 7-point Gauss nodes.
constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double roundoff_factor = 50.0 * std::numeric_limits<double>::epsilon();

struct Interval {
  std::size_t piece;
  double lo, hi;
  complex value;
  double err;
  double abs_value;
  bool frozen;  // cannot be refined further
  bool at_roundoff = false;
};

Interval evaluate(const ComplexFunction& g, const Segment& seg, std::size_t piece, double lo,
                  double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  auto h = [&](double s) { return g(segment_point(seg, s)) * segment_tangent(seg, s); };

  const complex fc = h(mid);
  complex kron = fc * kronrod_w[7];
  complex gauss = fc * gauss_w[3];
  double kabs = std::abs(fc) * kronrod_w[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kronrod_x[j];
    const complex f1 = h(mid - dx);
    const complex f2 = h(mid + dx);
    kron += (f1 + f2) * kronrod_w[j];
    kabs += (std::abs(f1) + std::abs(f2)) * kronrod_w[j];
    if (j % 2 == 1) gauss += (f1 + f2) * gauss_w[j / 2];
  }
  kron *= half;
  gauss *= half;
  kabs *= std::abs(half);

  Interval iv{piece, lo, hi, kron, std::abs(kron - gauss), kabs, false};
  const double floor = roundoff_factor * kabs;
  if (iv.err <= floor) {
    iv.err = floor;
    iv.frozen = true;
    iv.at_roundoff = true;
  }
  const double width_floor = 1e-13 * std::max({1.0, std::abs(lo), std::abs(hi)});
  if (std::abs(hi - lo) <= width_floor) {
    iv.frozen = true;
    iv.at_roundoff = false;
  }
  return iv;
}

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

QuadResult integrate_pieces(const ComplexFunction& g, std::span<const SegmentPiece> pieces,
                            const QuadConfig& cfg) {
  cfg.validate();
  QuadResult result;

  std::vector<Interval> done;  // frozen intervals
  auto by_error = [](const Interval& x, const Interval& y) {
    if (x.err != y.err) return x.err < y.err;
    if (x.piece != y.piece) return x.piece > y.piece;
    return x.lo > y.lo;
  };
  // Max-heap on err; a plain vector so the exact totals can be recomputed.
  std::vector<Interval> open;
  auto push = [&](const Interval& iv) {
    open.push_back(iv);
    std::push_heap(open.begin(), open.end(), by_error);
  };

  double err2 = 0.0;
  complex total{};
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto& p = pieces[k];
    if (segment_degenerate(p.segment) || p.lo == p.hi) continue;
    Interval iv = evaluate(g, p.segment, k, p.lo, p.hi);
    result.evals += 15;
    if (!finite(iv.value)) {
      throw EvalError(segment_point(p.segment, 0.5 * (p.lo + p.hi)), "non-finite integrand value");
    }
    err2 += iv.err * iv.err;
    total += iv.value;
    if (iv.frozen) done.push_back(iv);
    else push(iv);
  }

  auto tolerance = [&](complex v) { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v)); };

  // The running sums drift after large early errors are subtracted away.
  auto recompute = [&] {
    err2 = 0.0;
    total = complex{};
    for (const auto* list : {&open, &done}) {
      for (const auto& iv : *list) {
        err2 += iv.err * iv.err;
        total += iv.value;
      }
    }
  };

  int subdivisions = 0;
  while (!open.empty() && subdivisions < cfg.max_subdivisions) {
    if (std::sqrt(std::max(err2, 0.0)) <= tolerance(total)) {
      recompute();
      if (std::sqrt(err2) <= tolerance(total)) break;
    }
    std::pop_heap(open.begin(), open.end(), by_error);
    Interval worst = open.back();
    open.pop_back();
    const auto& seg = pieces[worst.piece].segment;
    const double mid = 0.5 * (worst.lo + worst.hi);
    Interval left = evaluate(g, seg, worst.piece, worst.lo, mid);
    Interval right = evaluate(g, seg, worst.piece, mid, worst.hi);
    result.evals += 30;
    if (!finite(left.value) || !finite(right.value)) {
      throw EvalError(segment_point(seg, mid), "non-finite integrand value");
    }
    ++subdivisions;
    err2 += left.err * left.err + right.err * right.err - worst.err * worst.err;
    total += left.value + right.value - worst.value;
    for (Interval* iv : {&left, &right}) {
      if (iv->frozen) done.push_back(*iv);
      else push(*iv);
    }
  }

  // Deterministic final reduction, in path order.
  std::vector<Interval> all = std::move(done);
  all.insert(all.end(), open.begin(), open.end());
  std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) {
    return x.piece != y.piece ? x.piece < y.piece : x.lo < y.lo;
  });
  complex value{};
  double e2 = 0.0, abs_sum = 0.0;
  for (const auto& iv : all) {
    value += iv.value;
    e2 += iv.err * iv.err;
    abs_sum += iv.abs_value;
  }
  result.value = value;
  result.err_estimate = std::sqrt(e2);
  result.abs_integral = abs_sum;
  result.subdivisions = subdivisions;
  // Every interval at its roundoff floor is as converged as the data allows.
  const bool roundoff_limited =
      open.empty() && std::all_of(all.begin(), all.end(), [](const Interval& iv) { return iv.at_roundoff; });
  result.converged = result.err_estimate <= tolerance(value) || roundoff_limited;
  return result;
}

std::vector<double> clustered_splits(const Segment& seg, complex focus) {
  std::vector<double> splits;
  const double len = segment_length(seg);
  if (len == 0.0) return splits;
  const auto* line = std::get_if<Line>(&seg);
  if (!line) return splits;
  const complex d = line->to - line->from;
  const double t_star = (std::conj(d) * (focus - line->from)).real() / std::norm(d);
  const complex nearest = line->from + std::clamp(t_star, 0.0, 1.0) * d;
  const double dist = std::abs(focus - nearest);
  // Only worth it when the focus is close compared with the segment length.
  if (!(dist > 0.0) || dist > 0.25 * len) return splits;
  const double step = dist / len;
  if (t_star > 0.0 && t_star < 1.0) splits.push_back(t_star);
  for (double r = step; r < 1.0; r *= 2.0) {
    for (double t : {t_star - r, t_star + r}) {
      if (t > 1e-12 && t < 1.0 - 1e-12) splits.push_back(t);
    }
  }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end(),
                           [](double x, double y) { return std::abs(x - y) < 1e-14; }),
               splits.end());
  return splits;
}

QuadResult integrate_segments(const ComplexFunction& g, std::span<const Segment> segments,
                              const QuadConfig& cfg, std::optional<complex> focus) {
  std::vector<SegmentPiece> pieces;
  for (const auto& seg : segments) {
    if (segment_degenerate(seg)) continue;
    std::vector<double> cuts{0.0};
    if (focus) {
      const auto inner = clustered_splits(seg, *focus);
      cuts.insert(cuts.end(), inner.begin(), inner.end());
    }
    if (const auto* arc = std::get_if<Arc>(&seg)) {
      // Quarter-turn pieces keep the initial rule well inside its accuracy range.
      const int parts =
          std::max(1, static_cast<int>(std::ceil(std::abs(arc->theta_end - arc->theta_start) /
                                                 (0.5 * 3.141592653589793))));
      for (int k = 1; k < parts; ++k) cuts.push_back(static_cast<double>(k) / parts);
    }
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k + 1] > cuts[k]) pieces.push_back({seg, cuts[k], cuts[k + 1]});
    }
  }
  return integrate_pieces(g, pieces, cfg);
}

QuadResult integrate_path(const IntegralSpec& spec, const ComplexPath& path, const QuadConfig& cfg) {
  const complex pole{spec.x0(), 0.0};
  if (path.distance_to(pole) == 0.0) throw DomainError("path passes through x0");
  return integrate_segments([&](complex z) { return spec.integrand(z); }, path.segments(), cfg,
                            pole);
}

QuadResult integrate_real_segment(const IntegralSpec& spec, double lo, double hi,
                                  const QuadConfig& cfg) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("real segment must be finite");
  if (std::min(lo, hi) <= spec.x0() && spec.x0() <= std::max(lo, hi)) {
    throw DomainError("real segment [" + std::to_string(std::min(lo, hi)) + ", " +
                      std::to_string(std::max(lo, hi)) + "] contains x0 = " +
                      std::to_string(spec.x0()));
  }
  const Segment seg = Line{complex{lo, 0.0}, complex{hi, 0.0}};
  return integrate_segments([&](complex z) { return spec.integrand(z); },
                            std::span<const Segment>(&seg, 1), cfg, complex{spec.x0(), 0.0});
}

}  // namespace apv
