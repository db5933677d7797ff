#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "apv/cos_example.hpp"
#include "apv/error.hpp"
#include "apv/principal_value.hpp"
#include "apv/spf.hpp"

using namespace apv;

namespace {

constexpr double pi = std::numbers::pi;
const complex I{0.0, 1.0};

IntegralSpec entire(const char* f, double a, double b, double x0, int n) {
  return IntegralSpec(parse(f), AnalyticityDecl::entire_function(), a, b, x0, n);
}

}  // namespace

TEST(Phi, ConstantAtI) {
  const IntegralSpec s = entire("1", -1, 1, 0, 0);
  EXPECT_NEAR(std::abs(phi_at(s, I, {}).value - complex(0, pi / 2)), 0.0, 1e-14);
}

TEST(Phi, DecaysFarAway) {
  const IntegralSpec s = entire("1", -1, 1, 0, 0);
  const complex z{0.0, 1e10};
  EXPECT_LE(std::abs(phi_at(s, z, {}).value), 2.0 * 2.0 / 1e10);
}

TEST(Phi, MatchesCompositeRule) {
  const IntegralSpec s = entire("cos(z)", -1, 1, 0, 1);
  const complex z{0.0, 0.5};
  // Composite Simpson with 10^4 panels.
  const int m = 10000;
  const double h = 2.0 / m;
  complex sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double x = -1.0 + k * h;
    const double w = (k == 0 || k == m) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    sum += w * std::cos(x) / ((x - z) * (x - z));
  }
  sum *= h / 3.0;
  EXPECT_NEAR(std::abs(phi_at(s, z, {}).value - sum), 0.0, 1e-10);
}

TEST(Phi, RejectsPointsOnSegment) {
  const IntegralSpec s = entire("1", -1, 1, 0, 0);
  EXPECT_THROW(phi_at(s, 0.3, {}), DomainError);
  EXPECT_NO_THROW(phi_at(s, 3.0, {}));
}

TEST(Boundary, CosN0) {
  const IntegralSpec s = entire("cos(z)", -1, 1, 0, 0);
  const BoundaryReport b = boundary_values(s, YSchedule::defaults(s), {});
  EXPECT_NEAR(std::abs(b.phi_plus - complex(0, pi)), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(b.phi_minus - complex(0, -pi)), 0.0, 1e-8);
  EXPECT_FALSE(b.diverged);
  EXPECT_EQ(b.y_samples.size(), YSchedule::defaults(s).y_values.size());
}

TEST(Boundary, CosN1) {
  const IntegralSpec s = entire("cos(z)", -1, 1, 0, 1);
  const BoundaryReport b = boundary_values(s, YSchedule::defaults(s), {});
  EXPECT_NEAR(std::abs(b.phi_plus - cos_fpi_n1()), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(b.phi_minus - cos_fpi_n1()), 0.0, 1e-7);
}

TEST(Boundary, ConstantN0) {
  const IntegralSpec s = entire("1", -1, 1, 0, 0);
  EXPECT_NEAR(std::abs(boundary_values(s, YSchedule::defaults(s), {}).phi_plus - complex(0, pi)), 0.0, 1e-8);
}

TEST(Boundary, ScheduleDefaultsAndValidation) {
  const IntegralSpec s = entire("1", -1, 1, 0, 0);
  const YSchedule d = YSchedule::defaults(s);
  EXPECT_DOUBLE_EQ(d.y_values.front(), 0.25);
  EXPECT_GE(d.y_values.back(), 2e-4);
  EXPECT_EQ(d.y_values.size(), 11u);
  EXPECT_THROW((YSchedule{{0.1, 0.2}}).validate(s), DomainError);
  EXPECT_THROW((YSchedule{{1e-5}}).validate(s), DomainError);
  EXPECT_THROW((YSchedule{{}}).validate(s), DomainError);
}

TEST(SpfIdentity, Examples) {
  for (auto [f, n] : {std::pair{"cos(z)", 0}, {"cos(z)", 1}, {"exp(z)", 2}}) {
    const IntegralSpec s = entire(f, -1, 1, 0, n);
    const SpfIdentity id = spf_identity_check(s, default_path(s, Side::above), default_path(s, Side::below),
                                              YSchedule::defaults(s), {});
    EXPECT_LE(id.max_abs_diff, 1e-6) << f << " n=" << n;
    EXPECT_DOUBLE_EQ(id.max_abs_diff, std::max(id.diff_plus, id.diff_minus));
  }
}
