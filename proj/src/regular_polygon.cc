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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "sphtile/roots.h"

namespace sphtile {

using std::numbers::pi;

namespace {

constexpr double kSlack = 1e-12;

void check_n(int n) {
  if (n < 3) {
    throw std::domain_error(fmt::format("polygon needs n >= 3, got {}", n));
  }
}

void check_angle(int n, double alpha) {
  check_n(n);
  if (!(alpha > min_angle(n))) {
    throw std::domain_error(fmt::format(
        "{}-gon angle {:.6f} rad must exceed (n-2)pi/n = {:.6f} rad", n, alpha,
        min_angle(n)));
  }
  if (alpha > pi + kSlack) {
    throw std::domain_error(fmt::format(
        "{}-gon angle {:.6f} rad must not exceed pi", n, alpha));
  }
}

// The side formula without range checks; monotone on the admissible range.
double raw_side(int n, double alpha) {
  const double c = std::cos(alpha / 2), s = std::sin(alpha / 2);
  const double arg = (std::cos(2 * pi / n) + c * c) / (s * s);
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

}  // namespace

double min_angle(int n) { return (n - 2) * pi / n; }

double side_from_angle(int n, double alpha) {
  check_angle(n, alpha);
  return raw_side(n, std::min(alpha, pi));
}

double angle_from_side(int n, double side) {
  check_n(n);
  const double max_side = 2 * pi / n;
  if (!(side > 0)) {
    throw std::domain_error(
        fmt::format("{}-gon side {:.6f} rad must be positive", n, side));
  }
  if (side > max_side + kSlack) {
    throw std::domain_error(fmt::format(
        "{}-gon side {:.6f} rad must not exceed 2pi/n = {:.6f} rad", n, side,
        max_side));
  }
  if (side >= max_side) return pi;
  return bisect_root([&](double a) { return raw_side(n, a) - side; },
                     min_angle(n), pi, 1e-13);
}

double area_of(int n, double alpha) {
  check_angle(n, alpha);
  return n * alpha - (n - 2) * pi;
}

double circumradius(int n, double alpha) {
  check_angle(n, alpha);
  const double c = std::cos(pi / n) / std::sin(pi / n) /
                   std::tan(std::min(alpha, pi) / 2);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double inradius(int n, double alpha) {
  const double half = side_from_angle(n, alpha) / 2;
  return std::acos(std::clamp(std::cos(circumradius(n, alpha)) / std::cos(half),
                              -1.0, 1.0));
}

RegularPolygonSpec RegularPolygonSpec::from_angle(int n, double angle) {
  RegularPolygonSpec s;
  s.n = n;
  s.angle = std::min(angle, pi + 0.0);
  s.side = side_from_angle(n, angle);
  s.area = area_of(n, s.angle);
  s.circumradius = sphtile::circumradius(n, s.angle);
  return s;
}

RegularPolygonSpec RegularPolygonSpec::from_side(int n, double side) {
  RegularPolygonSpec s = from_angle(n, angle_from_side(n, side));
  s.side = side;
  return s;
}

RegularPolygonSpec RegularPolygonSpec::complement() const {
  RegularPolygonSpec s = *this;
  s.angle = 2 * pi - angle;
  s.area = 4 * pi - area;
  s.circumradius = pi - circumradius;
  return s;
}

std::string RegularPolygonSpec::label() const {
  return fmt::format("{}@{:.4f}", n, angle * 180 / pi);
}

}  // namespace sphtile
