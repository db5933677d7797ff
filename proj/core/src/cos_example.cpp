#include "apv/cos_example.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "apv/error.hpp"

namespace apv {

double sine_integral(double x) {
  // term_k = (-1)^k x^(2k+1) / (2k+1)!, summed with weight 1/(2k+1).
  double power_term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    power_term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
    const double next = sum + power_term / (2.0 * k + 1.0);
    if (next == sum) break;
    sum = next;
  }
  return sum;
}

double cos_fpi_n1() { return -2.0 * (std::cos(1.0) + sine_integral(1.0)); }

double cos_fpi_n3() { return (sine_integral(1.0) + std::sin(1.0) - std::cos(1.0)) / 3.0; }

double cos_apv_integrand(double theta, int n) {
  const double c = std::cos(theta), s = std::sin(theta);
  return -std::sin(c) * std::sinh(s) * std::cos(n * theta) -
         std::cos(c) * std::cosh(s) * std::sin(n * theta);
}

QuadResult cos_apv_quadrature(int n, const QuadConfig& cfg) {
  // Pre-split into half-periods of sin(n t) so each piece is smooth and low order.
  const int parts = 2 * std::max(1, n) + 2;
  std::vector<SegmentPiece> pieces;
  const Segment seg = Line{complex{0.0, 0.0}, complex{std::numbers::pi, 0.0}};
  for (int k = 0; k < parts; ++k) {
    pieces.push_back({seg, static_cast<double>(k) / parts, static_cast<double>(k + 1) / parts});
  }
  return integrate_pieces([n](complex t) { return complex{cos_apv_integrand(t.real(), n), 0.0}; },
                          pieces, cfg);
}

void AsymParams::validate() const {
  if (n < 1) throw DomainError("asymptotic expansion needs n >= 1");
  if (terms < 1 || terms > 6) throw DomainError("asymptotic expansion supports 1..6 terms");
}

double cos_fpi_asymptotic(const AsymParams& params) {
  params.validate();
  const double c1 = std::cos(1.0), s1 = std::sin(1.0);
  // Coefficient of ((-1)^n - 1) / n^k is -Im(g^(k-1)(0) / i^k), g(t) = cos(e^{it}).
  // Note the 1/n^4 coefficient is -3cos1.
  const double coeff[6] = {c1, -s1, -(c1 + s1), -3.0 * c1, 5.0 * s1 - 6.0 * c1,
                           -(5.0 * c1 - 23.0 * s1)};
  const double parity = (params.n % 2 == 0) ? 0.0 : -2.0;
  if (parity == 0.0) return 0.0;
  const double inv = 1.0 / params.n;
  double p = inv, sum = 0.0;
  for (int k = 0; k < params.terms; ++k) {
    sum += coeff[k] * p;
    p *= inv;
  }
  return parity * sum;
}

std::vector<AsymptoticRow> asymptotic_table(const std::vector<int>& ns, int terms,
                                            const QuadConfig& cfg) {
  std::vector<AsymptoticRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    const double apv = cos_apv_quadrature(n, cfg).value.real();
    const double asym = cos_fpi_asymptotic({n, terms});
    rows.push_back({n, apv, asym, std::abs(apv - asym)});
  }
  return rows;
}

void write_asymptotic_csv(std::ostream& out, const std::vector<AsymptoticRow>& rows) {
  out << "n,apv_value,asym_value,abs_err\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", r.n, r.apv_value, r.asym_value,
                  r.abs_err);
    out << buf;
  }
}

}  // namespace apv
