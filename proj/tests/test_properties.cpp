#include <gtest/gtest.h>

#include "support/properties.hpp"

using namespace apv::testing;

namespace {

// Seeds differ from the acceptance run so the two cover different cases.
constexpr int kCases = 600;

void expect_clean(const PropertyTally& t) {
  EXPECT_GE(t.cases, kCases);
  EXPECT_EQ(t.failures, 0) << t.first_failure;
}

}  // namespace

TEST(Property, ExpressionRoundTrip) { expect_clean(expression_round_trip(kCases, 101)); }

TEST(Property, SideClassificationRoundTrip) { expect_clean(side_classification_round_trip(kCases, 102)); }

TEST(Property, QuadratureOrientationAdditivity) {
  const PropertyTally t = quadrature_orientation_additivity(kCases, 103);
  expect_clean(t);
  RecordProperty("worst_relative", std::to_string(t.worst));
}

TEST(Property, PhiConjugateSymmetry) {
  const PropertyTally t = phi_conjugate_symmetry(kCases, 104);
  expect_clean(t);
  RecordProperty("worst_relative", std::to_string(t.worst));
}
