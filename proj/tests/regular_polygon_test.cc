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

#include "sphtile/regular_polygon.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "sphtile/sphere.h"

namespace sphtile {
namespace {

using std::numbers::pi;

// Oracle: vertices on a small circle of radius r about the pole, measured
// with plain vector geometry.
struct Measured {
  double side, angle, area;
};

Measured measure(int n, double r) {
  std::vector<UnitVec> v;
  for (int k = 0; k < n; ++k) v.push_back(UnitVec::spherical(r, 2 * pi * k / n));
  return {std::acos(v[0].dot(v[1])), corner_angle(v[n - 1], v[0], v[1]),
          polygon_area(v)};
}

TEST(RegularPolygonTest, MatchesCoordinateOracle) {
  for (int n = 3; n <= 10; ++n) {
    for (double r : {0.1, 0.4, 0.8, 1.2, 1.5}) {
      const Measured m = measure(n, r);
      if (m.angle >= pi) continue;
      EXPECT_NEAR(side_from_angle(n, m.angle), m.side, 1e-12) << n << " " << r;
      EXPECT_NEAR(angle_from_side(n, m.side), m.angle, 1e-11) << n << " " << r;
      EXPECT_NEAR(area_of(n, m.angle), m.area, 1e-12);
      EXPECT_NEAR(circumradius(n, m.angle), r, 1e-12);
    }
  }
}

TEST(RegularPolygonTest, PlatonicFaces) {
  // Octahedron, cube, dodecahedron, icosahedron faces.
  EXPECT_NEAR(side_from_angle(3, pi / 2), pi / 2, 1e-15);
  EXPECT_NEAR(side_from_angle(4, 2 * pi / 3), std::acos(1.0 / 3), 1e-15);
  EXPECT_NEAR(side_from_angle(5, 2 * pi / 3), std::acos(std::sqrt(5.0) / 3), 1e-14);
  EXPECT_NEAR(side_from_angle(3, 2 * pi / 5), std::atan(2.0), 1e-14);
}

TEST(RegularPolygonTest, HemisphereAtAngleOfPi) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_NEAR(side_from_angle(n, pi), 2 * pi / n, 1e-15);
    EXPECT_NEAR(circumradius(n, pi), pi / 2, 1e-15);
    EXPECT_NEAR(area_of(n, pi), 2 * pi, 1e-14);
  }
}

TEST(RegularPolygonTest, InradiusOracle) {
  // Distance from the center to a side midpoint.
  const int n = 5;
  const double r = 0.6;
  const Measured m = measure(n, r);
  const UnitVec a = UnitVec::spherical(r, 0), b = UnitVec::spherical(r, 2 * pi / n);
  const UnitVec mid(a.vec() + b.vec());
  EXPECT_NEAR(inradius(n, m.angle), angular_distance(mid, UnitVec::north()), 1e-13);
}

TEST(RegularPolygonTest, RejectsFlatOrTooSmallAngles) {
  EXPECT_NEAR(min_angle(3), pi / 3, 1e-15);
  EXPECT_NEAR(min_angle(6), 2 * pi / 3, 1e-15);
  EXPECT_THROW(side_from_angle(3, pi / 3), std::domain_error);
  EXPECT_THROW(side_from_angle(4, 0.2), std::domain_error);
  EXPECT_THROW(angle_from_side(3, 0), std::domain_error);
  EXPECT_THROW(angle_from_side(3, 2 * pi / 3 + 1e-6), std::domain_error);
  EXPECT_THROW(side_from_angle(2, 1.0), std::domain_error);
}

TEST(RegularPolygonSpecTest, FromAngleAndFromSideAgree) {
  const RegularPolygonSpec a = RegularPolygonSpec::from_angle(4, 2.0);
  const RegularPolygonSpec b = RegularPolygonSpec::from_side(4, a.side);
  EXPECT_EQ(b.n, 4);
  EXPECT_NEAR(b.angle, 2.0, 1e-13);
  EXPECT_NEAR(b.area, a.area, 1e-13);
  EXPECT_NEAR(b.circumradius, a.circumradius, 1e-13);
  EXPECT_EQ(a.label(), "4@114.5916");
}

TEST(RegularPolygonSpecTest, Complement) {
  const RegularPolygonSpec s = RegularPolygonSpec::from_angle(3, 2.0);
  const RegularPolygonSpec c = s.complement();
  EXPECT_NEAR(c.angle, 2 * pi - 2.0, 1e-15);
  EXPECT_NEAR(c.side, s.side, 1e-15);
  EXPECT_NEAR(c.area, 4 * pi - s.area, 1e-14);
  EXPECT_TRUE(c.is_reflex());
  EXPECT_FALSE(s.is_reflex());
}

}  // namespace
}  // namespace sphtile
