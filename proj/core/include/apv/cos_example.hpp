#pragma once

// The worked example  int_{-1}^{1} cos(x) / x^(n+1) dx : its real integrand on
// the unit semicircles, the large-n expansion, and the sine integral needed
// for the closed forms.

#include <iosfwd>
#include <vector>

#include "apv/quadrature.hpp"

namespace apv {

/// Si(x) = sum_k (-1)^k x^(2k+1) / ((2k+1) (2k+1)!), summed until the terms
/// stop changing the total. Intended for |x| <= 10 or so.
double sine_integral(double x);

/// -2 (cos 1 + Si 1): the n = 1 finite part.
double cos_fpi_n1();
/// (Si 1 + sin 1 - cos 1) / 3: the n = 3 finite part.
double cos_fpi_n3();

/// -sin(cos t) sinh(sin t) cos(n t) - cos(cos t) cosh(sin t) sin(n t). Its
/// integral over [0, pi] is the APV of cos(x)/x^(n+1) on [-1, 1].
double cos_apv_integrand(double theta, int n);

/// Quadrature of cos_apv_integrand over [0, pi].
QuadResult cos_apv_quadrature(int n, const QuadConfig& cfg);

struct AsymParams {
  int n = 1;
  int terms = 6;

  /// Throws DomainError unless n >= 1 and 1 <= terms <= 6.
  void validate() const;
};

/// Large-n expansion of the APV truncated after `terms` powers of 1/n:
///   ((-1)^n - 1) [ cos1/n - sin1/n^2 - (cos1 + sin1)/n^3 - 3cos1/n^4
///                  + (5sin1 - 6cos1)/n^5 - (5cos1 - 23sin1)/n^6 ]
double cos_fpi_asymptotic(const AsymParams& params);

struct AsymptoticRow {
  int n;
  double apv_value;
  double asym_value;
  double abs_err;
};

/// apv_value from cos_apv_quadrature, asym_value from cos_fpi_asymptotic.
std::vector<AsymptoticRow> asymptotic_table(const std::vector<int>& ns, int terms,
                                            const QuadConfig& cfg);

/// CSV with header "n,apv_value,asym_value,abs_err".
void write_asymptotic_csv(std::ostream& out, const std::vector<AsymptoticRow>& rows);

}  // namespace apv
