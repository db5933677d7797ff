#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace apv {

template <class T>
struct Extrapolated {
  T value{};
  double err_estimate = 0.0;
  /// The first two samples differ by more than their noise and no table
  /// entry improved on that difference.
  bool diverged = false;
  int order = 0;       // polynomial degree of the chosen entry
  std::size_t first = 0;  // index of its first sample
};

/// Neville extrapolation of samples v(h_k) to h = 0, assuming v is smooth
/// (a polynomial of any parity) in h. Every entry of the table up to
/// `max_order` is a candidate. Its error is the larger of its two
/// order-lowering corrections plus the sample noise propagated through the
/// Lagrange weights. The entry with the smallest error wins. Samples whose
/// noise swamps the signal are then skipped, because their entries score
/// badly.
///
/// h must be strictly decreasing or strictly increasing and positive; noise
/// may be empty (taken as zero).
template <class T>
Extrapolated<T> extrapolate_to_zero(std::span<const double> h, std::span<const T> v,
                                    std::span<const double> noise, int max_order) {
  const std::size_t m = h.size();
  if (m != v.size() || m == 0 || (!noise.empty() && noise.size() != m)) {
    throw std::invalid_argument("extrapolate_to_zero: mismatched or empty sample arrays");
  }
  Extrapolated<T> best;
  best.value = v[m - 1];
  best.err_estimate = std::numeric_limits<double>::infinity();
  if (m == 1) {
    best.err_estimate = noise.empty() ? 0.0 : noise[0];
    best.first = 0;
    return best;
  }

  // prev[i] holds P_{i..i+j-1}(0); noise_prev likewise.
  std::vector<T> prev(v.begin(), v.end());
  std::vector<double> nprev(m, 0.0);
  if (!noise.empty()) nprev.assign(noise.begin(), noise.end());

  const double first_diff = std::abs(v[1] - v[0]);

  // Order 0: sample k scored by its gap to the next sample.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double e = std::abs(v[i + 1] - v[i]) + nprev[i];
    if (e < best.err_estimate) {
      best = {v[i + 1], e, false, 0, i + 1};
    }
  }

  const int top = std::min<int>(max_order, static_cast<int>(m) - 1);
  for (int j = 1; j <= top; ++j) {
    std::vector<T> cur(m - j);
    std::vector<double> ncur(m - j);
    for (std::size_t i = 0; i + j < m; ++i) {
      const double hi = h[i], hj = h[i + j];
      cur[i] = (hi * prev[i + 1] - hj * prev[i]) / (hi - hj);
      ncur[i] = (std::abs(hi) * nprev[i + 1] + std::abs(hj) * nprev[i]) / std::abs(hi - hj);
    }
    for (std::size_t i = 0; i + j < m; ++i) {
      const double corr = std::max(std::abs(cur[i] - prev[i]), std::abs(cur[i] - prev[i + 1]));
      const double e = corr + ncur[i];
      if (e < best.err_estimate) best = {cur[i], e, false, j, i};
    }
    prev = std::move(cur);
    nprev = std::move(ncur);
  }
  const double first_noise = noise.empty() ? 0.0 : noise[0] + noise[1];
  best.diverged = first_diff > first_noise && !(best.err_estimate < first_diff);
  return best;
}

}  // namespace apv
