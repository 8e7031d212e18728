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

#include "sphtile/sphere.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphtile {

using std::numbers::pi;

UnitVec::UnitVec(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw std::invalid_argument("UnitVec: cannot normalize a zero vector");
  }
  v_ = v / n;
}

UnitVec UnitVec::spherical(double theta, double phi) {
  return UnitVec(Vec3(std::sin(theta) * std::cos(phi),
                      std::sin(theta) * std::sin(phi), std::cos(theta)));
}

Isometry::Isometry(const Mat3& m) : m_(m) {
  const double err = (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (err > 1e-12) {
    throw std::invalid_argument("Isometry: matrix is not orthogonal");
  }
}

Isometry Isometry::rotation(const UnitVec& axis, double angle) {
  return Isometry(Eigen::AngleAxisd(angle, axis.vec()).toRotationMatrix(),
                  Raw{});
}

Isometry Isometry::reflection(const UnitVec& normal) {
  const Vec3& n = normal.vec();
  return Isometry(Mat3::Identity() - 2.0 * n * n.transpose(), Raw{});
}

namespace {

Mat3 frame(const UnitVec& p, const UnitVec& q) {
  Mat3 f;
  const Vec3 e = tangent_toward(p, q);
  f.col(0) = p.vec();
  f.col(1) = e;
  f.col(2) = p.vec().cross(e);
  return f;
}

}  // namespace

Isometry Isometry::aligning(const UnitVec& from1, const UnitVec& from2,
                            const UnitVec& to1, const UnitVec& to2) {
  return Isometry(frame(to1, to2) * frame(from1, from2).transpose(), Raw{});
}

Isometry Isometry::minimal_rotation(const UnitVec& from, const UnitVec& to) {
  const Vec3 axis = from.vec().cross(to.vec());
  const double s = axis.norm();
  const double c = from.dot(to);
  if (s < 1e-15) {
    if (c > 0) return identity();
    // Half turn about any axis perpendicular to `from`.
    Vec3 helper = std::abs(from.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    return rotation(UnitVec(from.vec().cross(helper)), pi);
  }
  return rotation(UnitVec(axis), std::atan2(s, c));
}

UnitVec Isometry::operator()(const UnitVec& p) const {
  return UnitVec(Vec3(m_ * p.vec()));
}

Arc::Arc(const UnitVec& a, const UnitVec& b) : a_(a), b_(b) {
  const double d = angular_distance(a, b);
  if (d < kAngleTol) throw std::invalid_argument("Arc: coincident endpoints");
  if (d > pi - kAngleTol) {
    throw std::invalid_argument("Arc: antipodal endpoints are ambiguous");
  }
}

double Arc::length() const { return angular_distance(a_, b_); }

UnitVec Arc::pole() const { return UnitVec(a_.vec().cross(b_.vec())); }

UnitVec Arc::point_at(double t) const {
  return walk(a_, b_, t * length());
}

double ArcIntersection::overlap_length() const {
  return kind == Kind::kOverlap ? angular_distance(first, second) : 0.0;
}

double angular_distance(const UnitVec& p, const UnitVec& q) {
  // atan2 form keeps precision for nearly coincident or antipodal points.
  const double s = p.vec().cross(q.vec()).norm();
  const double c = p.dot(q);
  return std::atan2(s, c);
}

Vec3 tangent_toward(const UnitVec& from, const UnitVec& to) {
  const Vec3 w = to.vec() - from.dot(to) * from.vec();
  const double n = w.norm();
  if (n < 1e-15) {
    throw std::invalid_argument(
        "tangent_toward: direction undefined for coincident or antipodal "
        "points");
  }
  return w / n;
}

UnitVec walk_along(const UnitVec& from, const Vec3& direction,
                   double distance) {
  return UnitVec(std::cos(distance) * from.vec() +
                 std::sin(distance) * direction);
}

UnitVec walk(const UnitVec& from, const UnitVec& toward, double distance) {
  return walk_along(from, tangent_toward(from, toward), distance);
}

double corner_angle(const UnitVec& prev, const UnitVec& apex,
                    const UnitVec& next) {
  for (const UnitVec* q : {&prev, &next}) {
    const double d = angular_distance(apex, *q);
    if (d < kAngleTol || d > pi - kAngleTol) {
      throw std::invalid_argument(
          "corner_angle: neighbor coincides with or is antipodal to the apex");
    }
  }
  const Vec3 tn = tangent_toward(apex, next);
  const Vec3 tp = tangent_toward(apex, prev);
  double a = std::atan2(apex.vec().dot(tn.cross(tp)), tn.dot(tp));
  if (a <= 0) a += 2 * pi;
  return a;
}

double distance_to_arc(const UnitVec& p, const Arc& arc) {
  const Vec3 n = arc.pole().vec();
  const Vec3 q = p.vec() - p.vec().dot(n) * n;
  const double endpoint_min =
      std::min(angular_distance(p, arc.a()), angular_distance(p, arc.b()));
  if (q.norm() < 1e-15) return endpoint_min;
  // Projection lies within the arc iff it is left of a and right of b.
  if (arc.a().vec().cross(q).dot(n) >= 0 &&
      q.cross(arc.b().vec()).dot(n) >= 0) {
    return std::asin(std::min(1.0, std::abs(p.vec().dot(n))));
  }
  return endpoint_min;
}

namespace {

double wrap_pi(double a) {
  while (a > pi) a -= 2 * pi;
  while (a <= -pi) a += 2 * pi;
  return a;
}

ArcIntersection collinear_intersection(const Arc& u, const Arc& v) {
  const Vec3 n = u.pole().vec();
  const Vec3& a = u.a().vec();
  const Vec3 e = n.cross(a);
  auto param = [&](const UnitVec& x) {
    return std::atan2(x.vec().dot(e), x.vec().dot(a));
  };
  auto at = [&](double t) {
    return UnitVec(std::cos(t) * a + std::sin(t) * e);
  };
  const double lu = u.length();
  const double tc = param(v.a());
  const double delta = wrap_pi(param(v.b()) - tc);
  const double vlo = std::min(tc, tc + delta);
  const double vhi = std::max(tc, tc + delta);

  ArcIntersection best;
  double best_len = -1;
  for (double shift : {-2 * pi, 0.0, 2 * pi}) {
    const double lo = std::max(0.0, vlo + shift);
    const double hi = std::min(lu, vhi + shift);
    const double len = hi - lo;
    if (len < -kAngleTol || len <= best_len) continue;
    best_len = len;
    if (len > kAngleTol) {
      best.kind = ArcIntersection::Kind::kOverlap;
      best.first = at(lo);
      best.second = at(hi);
    } else {
      best.kind = ArcIntersection::Kind::kPoint;
      best.first = at(0.5 * (lo + hi));
    }
  }
  return best;
}

}  // namespace

ArcIntersection arcs_intersect(const Arc& u, const Arc& v) {
  ArcIntersection out;
  const Vec3 nu = u.pole().vec();
  if (std::abs(nu.dot(v.a().vec())) < kAngleTol &&
      std::abs(nu.dot(v.b().vec())) < kAngleTol) {
    return collinear_intersection(u, v);
  }
  const Vec3 nv = v.pole().vec();
  if (std::abs(nv.dot(u.a().vec())) < kAngleTol &&
      std::abs(nv.dot(u.b().vec())) < kAngleTol) {
    return collinear_intersection(u, v);
  }
  // Touching configurations: an endpoint of one arc lies on the other.
  for (const UnitVec* p : {&v.a(), &v.b()}) {
    if (distance_to_arc(*p, u) <= kAngleTol) {
      out.kind = ArcIntersection::Kind::kPoint;
      out.first = *p;
      return out;
    }
  }
  for (const UnitVec* p : {&u.a(), &u.b()}) {
    if (distance_to_arc(*p, v) <= kAngleTol) {
      out.kind = ArcIntersection::Kind::kPoint;
      out.first = *p;
      return out;
    }
  }
  const Vec3 c = nu.cross(nv);
  if (c.norm() < 1e-15) return out;
  for (const UnitVec& x : {UnitVec(c), UnitVec(Vec3(-c))}) {
    if (distance_to_arc(x, u) <= kAngleTol &&
        distance_to_arc(x, v) <= kAngleTol) {
      out.kind = ArcIntersection::Kind::kPoint;
      out.first = x;
      return out;
    }
  }
  return out;
}

namespace {

void validate_boundary(std::span<const UnitVec> boundary) {
  const std::size_t n = boundary.size();
  if (n < 3) {
    throw std::invalid_argument("polygon needs at least three vertices");
  }
  std::vector<Arc> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(boundary[i], boundary[(i + 1) % n]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const ArcIntersection x = arcs_intersect(edges[i], edges[j]);
      if (x.kind == ArcIntersection::Kind::kEmpty) continue;
      if (!adjacent || x.kind == ArcIntersection::Kind::kOverlap) {
        throw std::invalid_argument("polygon boundary is self-intersecting");
      }
    }
  }
}

// Crossing parity of the path from an interior reference point to `p`.
// Returns -1 when the path is degenerate (grazes a vertex).
int crossing_parity(const UnitVec& ref, const UnitVec& p,
                    std::span<const UnitVec> boundary) {
  std::vector<Arc> legs;
  const double d = angular_distance(ref, p);
  if (d < kAngleTol) return 0;
  if (d > pi - 1e-6) {
    const Vec3 helper =
        std::abs(ref.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    const UnitVec mid(ref.vec().cross(helper));
    legs.emplace_back(ref, mid);
    legs.emplace_back(mid, p);
  } else {
    legs.emplace_back(ref, p);
  }
  const std::size_t n = boundary.size();
  int count = 0;
  for (const Arc& leg : legs) {
    for (std::size_t i = 0; i < n; ++i) {
      const Arc edge(boundary[i], boundary[(i + 1) % n]);
      const ArcIntersection x = arcs_intersect(leg, edge);
      if (x.kind == ArcIntersection::Kind::kEmpty) continue;
      if (x.kind == ArcIntersection::Kind::kOverlap) return -1;
      const double margin = 10 * kAngleTol;
      if (angular_distance(x.first, edge.a()) < margin ||
          angular_distance(x.first, edge.b()) < margin ||
          angular_distance(x.first, leg.a()) < margin ||
          angular_distance(x.first, leg.b()) < margin) {
        return -1;
      }
      ++count;
    }
  }
  return count % 2;
}

Location locate(const UnitVec& p, std::span<const UnitVec> boundary) {
  const std::size_t n = boundary.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (distance_to_arc(p, Arc(boundary[i], boundary[(i + 1) % n])) <=
        kAngleTol) {
      return Location::kBoundary;
    }
  }
  // Reference points sit just inside a corner, on its bisector first and
  // then off it, so symmetric layouts cannot make every ray degenerate.
  for (double frac : {0.5, 0.382, 0.713}) {
    for (double scale : {0.1, 0.037, 0.013}) {
      for (std::size_t i = 0; i < n; ++i) {
        const UnitVec& v = boundary[i];
        const UnitVec& next = boundary[(i + 1) % n];
        const UnitVec& prev = boundary[(i + n - 1) % n];
        double room = std::min(angular_distance(v, next),
                               angular_distance(v, prev));
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || (j + 1) % n == i) continue;
          room = std::min(room,
                          distance_to_arc(v, Arc(boundary[j], boundary[(j + 1) % n])));
        }
        const double turn = frac * corner_angle(prev, v, next);
        const Vec3 tn = tangent_toward(v, next);
        const Vec3 dir = std::cos(turn) * tn + std::sin(turn) * v.vec().cross(tn);
        const UnitVec ref = walk_along(v, dir, scale * room);
        const int parity = crossing_parity(ref, p, boundary);
        if (parity >= 0) {
          return parity == 0 ? Location::kInside : Location::kOutside;
        }
      }
    }
  }
  throw std::runtime_error("point_in_spherical_polygon: no usable reference");
}

}  // namespace

Location point_in_spherical_polygon(const UnitVec& p,
                                    std::span<const UnitVec> boundary) {
  validate_boundary(boundary);
  return locate(p, boundary);
}

namespace internal {

// Same as point_in_spherical_polygon without the O(n^2) boundary validation;
// used by the verifier on tiles it has already audited.
Location locate_in_polygon(const UnitVec& p,
                           std::span<const UnitVec> boundary) {
  return locate(p, boundary);
}

}  // namespace internal

double polygon_area(std::span<const UnitVec> boundary) {
  const std::size_t n = boundary.size();
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += corner_angle(boundary[(i + n - 1) % n], boundary[i],
                        boundary[(i + 1) % n]);
  }
  return sum - static_cast<double>(n - 2) * pi;
}

}  // namespace sphtile
