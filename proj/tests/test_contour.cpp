#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "apv/contour.hpp"
#include "apv/error.hpp"

using namespace apv;

namespace {

constexpr double pi = std::numbers::pi;

IntegralSpec unit(double a = -1.0, double b = 1.0, double x0 = 0.0) {
  return IntegralSpec(parse("1"), AnalyticityDecl::entire_function(), a, b, x0, 0);
}

void expect_line(const Segment& s, complex from, complex to) {
  ASSERT_TRUE(std::holds_alternative<Line>(s));
  EXPECT_EQ(std::get<Line>(s).from, from);
  EXPECT_EQ(std::get<Line>(s).to, to);
}

void expect_arc(const Segment& s, complex c, double r, double t0, double t1) {
  ASSERT_TRUE(std::holds_alternative<Arc>(s));
  const Arc& a = std::get<Arc>(s);
  EXPECT_EQ(a.center, c);
  EXPECT_DOUBLE_EQ(a.radius, r);
  EXPECT_DOUBLE_EQ(a.theta_start, t0);
  EXPECT_DOUBLE_EQ(a.theta_end, t1);
}

}  // namespace

TEST(Semicircle, AboveShape) {
  const ComplexPath p = semicircle_path(unit(), 0.5, Side::above);
  ASSERT_EQ(p.segments().size(), 3u);
  expect_line(p.segments()[0], -1.0, -0.5);
  expect_arc(p.segments()[1], 0.0, 0.5, pi, 0.0);
  expect_line(p.segments()[2], 0.5, 1.0);
  EXPECT_EQ(p.side(), Side::above);
}

TEST(Semicircle, BelowMirrorsArc) {
  const ComplexPath p = semicircle_path(unit(), 0.5, Side::below);
  expect_arc(p.segments()[1], 0.0, 0.5, -pi, 0.0);
}

TEST(Semicircle, EpsOutOfRange) {
  EXPECT_THROW(semicircle_path(unit(0, 2, 1), 1.5, Side::above), DomainError);
  EXPECT_THROW(semicircle_path(unit(0, 2, 1), 1.0, Side::above), DomainError);
  EXPECT_THROW(semicircle_path(unit(), 0.0, Side::above), DomainError);
  EXPECT_THROW(semicircle_path(unit(), 1e-9, Side::above), DomainError);
  EXPECT_THROW(semicircle_path(unit(), 0.5, Side::invalid), DomainError);
}

TEST(Semicircle, PoleInsideIndentationRejected) {
  const IntegralSpec s(parse("1/(z - 0.1i)"), AnalyticityDecl::with_poles({{0.0, 0.1}}), -1, 1, 0, 0);
  // The pole is off [a, b] by only 0.1, so shrink the margin to let the IntegralSpec through.
  EXPECT_THROW(semicircle_path(s, 0.5, Side::above, 0.01), RegionError);
  EXPECT_NO_THROW(semicircle_path(s, 0.5, Side::below, 0.01));
}

TEST(Bulge, UnitRadiusIsSingleArc) {
  const ComplexPath up = semicircle_bulge_path(unit(), 1.0, Side::above);
  ASSERT_EQ(up.segments().size(), 1u);
  expect_arc(up.segments()[0], 0.0, 1.0, pi, 0.0);
  const ComplexPath down = semicircle_bulge_path(unit(), 1.0, Side::below);
  ASSERT_EQ(down.segments().size(), 1u);
  expect_arc(down.segments()[0], 0.0, 1.0, -pi, 0.0);
}

TEST(Bulge, JoinsWithLines) {
  const ComplexPath p = semicircle_bulge_path(unit(-2, 2), 1.0, Side::above);
  ASSERT_EQ(p.segments().size(), 3u);
  expect_line(p.segments()[0], -2.0, -1.0);
  expect_arc(p.segments()[1], 0.0, 1.0, pi, 0.0);
  expect_line(p.segments()[2], 1.0, 2.0);
  EXPECT_THROW(semicircle_bulge_path(unit(-2, 2), 2.5, Side::above), DomainError);
}

TEST(Rectangle, ThreeLines) {
  const ComplexPath p = rectangle_path(unit(), 0.3, Side::below);
  ASSERT_EQ(p.segments().size(), 3u);
  expect_line(p.segments()[1], complex(-1, -0.3), complex(1, -0.3));
  EXPECT_EQ(classify_side(p, 0.0), Side::below);
}

TEST(ComplexPath, RejectsGaps) {
  EXPECT_THROW(ComplexPath({Line{0.0, 1.0}, Line{1.1, 2.0}}, Side::above), DomainError);
  EXPECT_THROW(ComplexPath({}, Side::above), DomainError);
  EXPECT_NO_THROW(ComplexPath({Line{0.0, 1.0}, Line{1.0, 2.0}}, Side::above));
}

TEST(Classify, ConstructorsRoundTrip) {
  const IntegralSpec s = unit(-1, 3, 0.5);
  for (double eps : {0.01, 0.5, 1.4}) {
    EXPECT_EQ(classify_side(semicircle_path(s, eps, Side::above), 0.5), Side::above);
    EXPECT_EQ(classify_side(semicircle_path(s, eps, Side::below), 0.5), Side::below);
  }
}

TEST(Classify, InvalidCases) {
  // Straight through x0.
  EXPECT_EQ(classify_side(ComplexPath({Line{-1.0, 1.0}}, Side::above), 0.0), Side::invalid);
  // Ends off the axis.
  EXPECT_EQ(classify_side(ComplexPath({Line{-1.0, complex(1, 1)}}, Side::above), 0.0), Side::invalid);
  // Loops once more around x0 than an above path.
  const ComplexPath loop({Line{-1.0, -0.5}, Arc{0.0, 0.5, pi, -pi}, Arc{0.0, 0.5, -pi, -2 * pi},
                          Line{0.5, 1.0}},
                         Side::above);
  EXPECT_EQ(classify_side(loop, 0.0), Side::invalid);
  // Reversed direction.
  EXPECT_EQ(classify_side(reversed_path(semicircle_path(unit(), 0.5, Side::above)), 0.0), Side::invalid);
}

TEST(Classify, SelfIntersectingIsInvalid) {
  // Above x0 overall, but the middle part crosses itself.
  const ComplexPath p({Line{-1.0, complex(-0.5, 1)}, Line{complex(-0.5, 1), complex(0.5, 0.2)},
                       Line{complex(0.5, 0.2), complex(0.5, 1.5)}, Line{complex(0.5, 1.5), complex(-0.2, 0.3)},
                       Line{complex(-0.2, 0.3), complex(1, 0.4)}, Line{complex(1, 0.4), 1.0}},
                      Side::above);
  EXPECT_TRUE(self_intersects(p));
  EXPECT_EQ(classify_side(p, 0.0), Side::invalid);
  EXPECT_FALSE(self_intersects(semicircle_path(unit(), 0.5, Side::above)));
}

TEST(Winding, ClosedCircle) {
  const Segment circle[] = {Arc{0.0, 1.0, 0.0, 2 * pi}};
  EXPECT_NEAR(winding_number(circle, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(winding_number(circle, 3.0), 0.0, 1e-15);
}

TEST(Mirror, SwapsSideAndConjugates) {
  const ComplexPath up = semicircle_path(unit(), 0.5, Side::above);
  const ComplexPath down = mirror_path(up);
  EXPECT_EQ(down.side(), Side::below);
  expect_arc(down.segments()[1], 0.0, 0.5, -pi, 0.0);
}

TEST(ValidatePath, ChecksEndpointsSideAndPoles) {
  const IntegralSpec s = unit();
  const ComplexPath up = semicircle_path(s, 0.5, Side::above);
  EXPECT_NO_THROW(validate_path(up, s, Side::above));
  EXPECT_THROW(validate_path(up, s, Side::below), SideError);
  EXPECT_THROW(validate_path(up, unit(-2, 1), Side::above), DomainError);

  const IntegralSpec poles(parse("1/(1+z^2)"), AnalyticityDecl::with_poles({{0, 1}, {0, -1}}), -1, 1, 0, 0);
  // A tall rectangle encloses the pole at i between itself and [a, b].
  EXPECT_THROW(validate_path(rectangle_path(s, 2.0, Side::above), poles, Side::above), RegionError);
  EXPECT_NO_THROW(validate_path(rectangle_path(s, 0.5, Side::above), poles, Side::above));
}

TEST(ValidatePath, TooCloseToPole) {
  const IntegralSpec s = unit();
  const ComplexPath tight({Line{-1.0, complex(-1e-8, 0)}, Arc{0.0, 1e-8, pi, 0.0}, Line{complex(1e-8, 0), 1.0}},
                          Side::above);
  EXPECT_EQ(classify_side(tight, 0.0), Side::above);
  EXPECT_THROW(validate_path(tight, s, Side::above), DomainError);
}

TEST(Segment, Geometry) {
  const Segment arc = Arc{0.0, 2.0, 0.0, pi / 2};
  EXPECT_NEAR(segment_length(arc), pi, 1e-15);
  EXPECT_NEAR(std::abs(segment_point(arc, 1.0) - complex(0, 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(segment_tangent(arc, 0.0) - complex(0, pi)), 0.0, 1e-15);
  EXPECT_TRUE(segment_degenerate(Line{1.0, 1.0}));
  EXPECT_NEAR(segment_distance(Line{-1.0, 1.0}, complex(0, 3)), 3.0, 0.0);
  EXPECT_NEAR(segment_arg_increment(Line{1.0, complex(-1, 1e-300)}, 0.0), pi, 1e-12);
}
