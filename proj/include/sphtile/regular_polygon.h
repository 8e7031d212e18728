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

// Regular spherical n-gons described by their angle, before placement.

#ifndef SPHTILE_REGULAR_POLYGON_H_
#define SPHTILE_REGULAR_POLYGON_H_

#include <string>

namespace sphtile {

// Side length of the regular n-gon with corner angle `alpha`.  Valid for
// (n-2)pi/n < alpha <= pi; throws std::domain_error naming the violated
// bound otherwise.
double side_from_angle(int n, double alpha);

// Inverse of side_from_angle by bisection (width 1e-13).  Valid for
// 0 < side <= 2pi/n.
double angle_from_side(int n, double side);

// Girard area n*alpha - (n-2)pi.
double area_of(int n, double alpha);

// Center-to-vertex distance; pi/2 for the hemisphere polygon alpha = pi.
double circumradius(int n, double alpha);

// Center-to-side distance.
double inradius(int n, double alpha);

// Smallest admissible angle (exclusive): (n-2)pi/n.
double min_angle(int n);

struct RegularPolygonSpec {
  int n = 3;
  double angle = 0;
  double side = 0;
  double area = 0;
  double circumradius = 0;

  static RegularPolygonSpec from_angle(int n, double angle);
  static RegularPolygonSpec from_side(int n, double side);

  // The closure of the sphere minus this polygon, traversed the other way:
  // same sides, angle 2pi - alpha, area 4pi - area.  Only the magic triangle
  // tiling uses one.
  RegularPolygonSpec complement() const;
  bool is_reflex() const { return angle > 3.14159265358979323846 + 1e-12; }

  // Short label such as "3@116.5651" (angle in degrees, 4 decimals).
  std::string label() const;
};

}  // namespace sphtile

#endif  // SPHTILE_REGULAR_POLYGON_H_
