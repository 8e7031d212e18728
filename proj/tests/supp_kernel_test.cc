// Copyright 2026 The sphtile Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "sphtile/supp_kernel.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "sphtile/regular_polygon.h"

namespace sphtile {
namespace {

using std::numbers::pi;

constexpr double kDeg = pi / 180;

// Oracle: half the side of a regular n-gon from the right triangle
// (center, corner, side midpoint): cos(s/2) = cos(pi/n) / sin(alpha/2).
double side_oracle(int n, double alpha) {
  return 2 * std::acos(std::cos(pi / n) / std::sin(alpha / 2));
}

TEST(SuppSameTest, ThreePairsWithEqualSides) {
  const auto pairs = supp_same_pairs();
  ASSERT_EQ(pairs.size(), 3u);
  for (const SuppSamePair& p : pairs) {
    EXPECT_NEAR(p.triangle_angle + p.partner_angle, pi, 1e-12);
    EXPECT_NEAR(side_oracle(3, p.triangle_angle), p.side, 1e-10);
    EXPECT_NEAR(side_oracle(p.partner_n, p.partner_angle), p.side, 1e-10);
    EXPECT_EQ(supp_root_sign_changes(p.partner_n), 1) << to_string(p.kind);
  }
}

TEST(SuppSameTest, PublishedAngles) {
  const auto pairs = supp_same_pairs();
  EXPECT_EQ(pairs[0].kind, SuppKind::kTriTri);
  EXPECT_NEAR(pairs[0].triangle_angle, 90 * kDeg, 5e-4 * kDeg);
  EXPECT_NEAR(pairs[0].side, pi / 2, 1e-9);
  EXPECT_EQ(pairs[1].kind, SuppKind::kTriSquare);
  EXPECT_NEAR(pairs[1].triangle_angle, 70.5288 * kDeg, 5e-4 * kDeg);
  EXPECT_NEAR(pairs[1].partner_angle, 109.4712 * kDeg, 5e-4 * kDeg);
  EXPECT_NEAR(pairs[1].side, pi / 3, 1e-9);
  EXPECT_EQ(pairs[2].kind, SuppKind::kTriPent);
  EXPECT_NEAR(pairs[2].triangle_angle, 63.4349 * kDeg, 5e-4 * kDeg);
  EXPECT_NEAR(pairs[2].partner_angle, 116.5651 * kDeg, 5e-4 * kDeg);
  EXPECT_NEAR(pairs[2].side, pi / 5, 1e-9);
}

TEST(SuppSameTest, ClosedFormAngles) {
  EXPECT_NEAR(supp_same_pairs()[1].triangle_angle, std::acos(1.0 / 3), 1e-10);
  EXPECT_NEAR(supp_same_pairs()[2].triangle_angle, std::atan(2.0), 1e-10);
}

TEST(FTest, MatchesOracleAndPublishedRoots) {
  for (double a : {1.1, 1.3, 1.5}) {
    EXPECT_NEAR(f(a), side_oracle(3, a) + side_oracle(4, pi - a), 1e-12);
  }
  EXPECT_NEAR(f(88.2545 * kDeg), 3 * pi / 5, 1e-3);
  EXPECT_NEAR(f(64.6756 * kDeg), 3 * pi / 5, 1e-3);
  EXPECT_NEAR(f(std::acos(1.0 / 3)), 2 * pi / 3, 1e-12);
}

TEST(FTest, ExactlyTwoRoots) {
  const auto roots = solve_g_equals({1, 1, 0, 0}, 3 * pi / 5);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_FALSE(roots[0].endpoint_limit);
  EXPECT_FALSE(roots[1].endpoint_limit);
  EXPECT_NEAR(roots[0].alpha, 64.6756 * kDeg, 5e-4 * kDeg);
  EXPECT_NEAR(roots[1].alpha, 88.2545 * kDeg, 5e-4 * kDeg);
  for (const GRoot& r : roots) EXPECT_NEAR(f(r.alpha), 3 * pi / 5, 1e-9);
}

TEST(GTest, SumOfSides) {
  const PerfectFitSignature sig{2, 1, 1, 1};
  const double a = 1.2;
  EXPECT_NEAR(g(a, sig), 2 * side_oracle(3, a) + side_oracle(4, pi - a) +
                             side_oracle(5, pi - a) + side_oracle(3, pi - a),
              1e-12);
  EXPECT_THROW(g(1.2, {0, 1, 0, 0}), std::domain_error);
  EXPECT_EQ(sig.to_string(), "(2,1,1,1)");
}

TEST(GTest, DomainShrinksWithPartners) {
  EXPECT_NEAR(g_domain({1, 0, 0, 0}).hi, pi, 0);
  EXPECT_NEAR(g_domain({1, 1, 0, 0}).hi, pi / 2, 0);
  EXPECT_NEAR(g_domain({1, 1, 1, 0}).hi, 2 * pi / 5, 0);
  EXPECT_NEAR(g_domain({1, 0, 0, 1}).hi, 2 * pi / 3, 0);
  EXPECT_NEAR(g_domain({1, 0, 0, 1}).lo, pi / 3, 0);
}

TEST(GTest, TypeTwoBigonSide) {
  EXPECT_NEAR(g(std::acos(1.0 / 3), {2, 1, 0, 0}), pi, 1e-12);
  const auto roots = solve_g_equals({2, 1, 0, 0}, pi);
  ASSERT_FALSE(roots.empty());
  bool supp_same = false, limit = false;
  for (const GRoot& r : roots) {
    if (r.endpoint_limit) {
      limit = limit || std::abs(r.alpha - pi / 2) < 1e-9;
    } else {
      supp_same = supp_same || std::abs(r.alpha - std::acos(1.0 / 3)) < 1e-9;
    }
  }
  EXPECT_TRUE(supp_same);
  EXPECT_TRUE(limit);
}

TEST(GTest, PublishedExtrema) {
  EXPECT_LT(g_maximum({2, 0, 1, 0}).value, 2.4);
  EXPECT_NEAR(g_maximum({1, 0, 1, 0}).value, 0.436 * pi, 5e-3 * pi);
  EXPECT_NEAR(g_infimum({1, 0, 0, 1}).value, 0.60817 * pi, 5e-5 * pi);
}

TEST(GTest, ExtremaDominateTheGrid) {
  for (const PerfectFitSignature& sig : classification_signatures()) {
    const Interval d = g_domain(sig);
    const Extremum hi = g_maximum(sig);
    for (int i = 1; i < 200; ++i) {
      const double a = d.lo + (d.hi - d.lo) * i / 200;
      EXPECT_LE(g(a, sig), hi.value + 1e-12) << sig.to_string();
    }
  }
}

TEST(GTest, DeclaredImpossibleFitsHaveNoInteriorRoot) {
  const auto list = declared_impossible_fits();
  EXPECT_FALSE(list.empty());
  for (const Impossibility& imp : list) {
    for (const GRoot& r : solve_g_equals(imp.sig, imp.target)) {
      EXPECT_TRUE(r.endpoint_limit) << imp.sig.to_string() << " " << r.alpha;
    }
  }
  EXPECT_TRUE(solve_g_equals({2, 0, 1, 0}, pi).empty());
}

TEST(GTest, ConcaveOnClassificationSignatures) {
  for (const PerfectFitSignature& sig : classification_signatures()) {
    EXPECT_LE(g_max_second_difference(sig), 1e-8) << sig.to_string();
  }
}

TEST(GTest, RestrictedWindow) {
  const auto roots = solve_g_equals({1, 1, 0, 0}, 3 * pi / 5, 80 * kDeg, 89 * kDeg);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].alpha, 88.2545 * kDeg, 5e-4 * kDeg);
}

}  // namespace
}  // namespace sphtile
