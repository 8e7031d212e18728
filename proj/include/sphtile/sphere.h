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

// Unit-sphere primitives shared by every other part of the library.
//
// Points are 3D unit vectors rather than latitude/longitude pairs, so the
// poles are not special.  Polygons are always stored counterclockwise as seen
// from outside the sphere, which puts the interior on the left of every
// directed side.

#ifndef SPHTILE_SPHERE_H_
#define SPHTILE_SPHERE_H_

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sphtile {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Coincidence tolerance for points, arcs and angles (radians).
inline constexpr double kAngleTol = 1e-9;
// Radius used when clustering tile corners into tiling vertices.  Two orders
// looser than kAngleTol to absorb drift from chained gluing.
inline constexpr double kClusterTol = 1e-7;

// A point on the unit sphere.
class UnitVec {
 public:
  // The north pole.
  UnitVec() : v_(0, 0, 1) {}
  // Normalizes `v`.  Throws std::invalid_argument for a (near) zero vector.
  explicit UnitVec(const Vec3& v);
  UnitVec(double x, double y, double z) : UnitVec(Vec3(x, y, z)) {}

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }

  double dot(const UnitVec& o) const { return v_.dot(o.v_); }
  UnitVec operator-() const { return UnitVec(-v_, Raw{}); }

  static UnitVec north() { return UnitVec(); }
  static UnitVec south() { return UnitVec(Vec3(0, 0, -1), Raw{}); }
  // Point at colatitude `theta` and longitude `phi`.
  static UnitVec spherical(double theta, double phi);
  // Keeps `v` unchanged; the caller has already checked its norm.
  static UnitVec as_is(const Vec3& v) { return UnitVec(v, Raw{}); }

 private:
  struct Raw {};
  UnitVec(const Vec3& v, Raw) : v_(v) {}
  friend class Isometry;

  Vec3 v_;
};

// Orthogonal map of the sphere (rotation or reflection).
class Isometry {
 public:
  Isometry() : m_(Mat3::Identity()) {}
  // Throws std::invalid_argument unless `m` is orthogonal within 1e-12.
  explicit Isometry(const Mat3& m);

  static Isometry identity() { return Isometry(); }
  // Right-handed rotation by `angle` about `axis`.
  static Isometry rotation(const UnitVec& axis, double angle);
  // Reflection through the plane with normal `normal`.
  static Isometry reflection(const UnitVec& normal);
  // Rotation taking `from1` to `to1` and the great circle through
  // (`from1`, `from2`) to the one through (`to1`, `to2`), preserving the side.
  // The pairs must subtend equal angles for the second point to map exactly.
  static Isometry aligning(const UnitVec& from1, const UnitVec& from2,
                           const UnitVec& to1, const UnitVec& to2);
  // Smallest rotation taking `from` to `to`.
  static Isometry minimal_rotation(const UnitVec& from, const UnitVec& to);

  UnitVec operator()(const UnitVec& p) const;
  Isometry operator*(const Isometry& o) const { return Isometry(m_ * o.m_, Raw{}); }
  Isometry inverse() const { return Isometry(m_.transpose(), Raw{}); }
  double determinant() const { return m_.determinant(); }
  bool is_reflection() const { return determinant() < 0; }
  const Mat3& matrix() const { return m_; }

 private:
  struct Raw {};
  Isometry(const Mat3& m, Raw) : m_(m) {}
  Mat3 m_;
};

// Minor great-circle arc between two distinct, non-antipodal points.
class Arc {
 public:
  // Throws std::invalid_argument if the endpoints coincide or are antipodal
  // within kAngleTol.
  Arc(const UnitVec& a, const UnitVec& b);

  const UnitVec& a() const { return a_; }
  const UnitVec& b() const { return b_; }
  double length() const;
  // Unit normal of the supporting great circle, on the left of a -> b.
  UnitVec pole() const;
  // Point at fraction t in [0, 1] of the way from a to b.
  UnitVec point_at(double t) const;

 private:
  UnitVec a_, b_;
};

struct ArcIntersection {
  enum class Kind { kEmpty, kPoint, kOverlap };
  Kind kind = Kind::kEmpty;
  // kPoint: `first` is the point.  kOverlap: the shared sub-arc runs from
  // `first` to `second`, oriented along the first argument of arcs_intersect.
  UnitVec first, second;

  double overlap_length() const;
};

// arccos of the clamped dot product, in [0, pi].
double angular_distance(const UnitVec& p, const UnitVec& q);

// Unit tangent at `from` pointing along the great circle toward `to`.
Vec3 tangent_toward(const UnitVec& from, const UnitVec& to);

// Point reached by walking `distance` radians from `from` along the great
// circle toward `toward`.  The distance may exceed the arc length.
UnitVec walk(const UnitVec& from, const UnitVec& toward, double distance);

// Point reached by walking `distance` from `from` along the unit tangent
// `direction`.
UnitVec walk_along(const UnitVec& from, const Vec3& direction, double distance);

// Interior angle at `apex` of a counterclockwise polygon whose boundary runs
// prev -> apex -> next.  The result lies in (0, 2 pi); values above pi mark a
// reflex corner.  Throws std::invalid_argument when a neighbor coincides with
// or is antipodal to the apex.
double corner_angle(const UnitVec& prev, const UnitVec& apex,
                    const UnitVec& next);

// Classifies how two minor arcs meet, with tolerance kAngleTol.  Collinear
// arcs are detected by comparing the poles of their great circles.
ArcIntersection arcs_intersect(const Arc& u, const Arc& v);

// Distance from `p` to the closest point of `arc`.
double distance_to_arc(const UnitVec& p, const Arc& arc);

enum class Location { kInside, kBoundary, kOutside };

// Locates `p` relative to a simple closed geodesic polygon given
// counterclockwise as seen from outside.  Works for reflex polygons (area
// above 2 pi).  Throws std::invalid_argument for a self-intersecting or
// degenerate boundary.
Location point_in_spherical_polygon(const UnitVec& p,
                                    std::span<const UnitVec> boundary);

// Girard area of a simple polygon from its measured corner angles.
double polygon_area(std::span<const UnitVec> boundary);

namespace internal {
// point_in_spherical_polygon without validating the boundary first.
Location locate_in_polygon(const UnitVec& p, std::span<const UnitVec> boundary);
}  // namespace internal

}  // namespace sphtile

#endif  // SPHTILE_SPHERE_H_
