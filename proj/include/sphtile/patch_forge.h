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

// Placing tiles and building the reusable patches: the five bigons,
// hemispheres, the magic triangle decomposition and the decomposable
// polygons.
//
// Every constructor is a gluing script: one tile is placed in a canonical
// frame and each further tile is glued onto a side of an earlier one.  The
// result is audited (side matches, boundary shape) before it is returned.

#ifndef SPHTILE_PATCH_FORGE_H_
#define SPHTILE_PATCH_FORGE_H_

#include <span>
#include <string>
#include <vector>

#include "sphtile/regular_polygon.h"
#include "sphtile/sphere.h"

namespace sphtile {

struct PlacedTile {
  RegularPolygonSpec spec;
  std::vector<UnitVec> vertices;  // counterclockwise from outside

  int n() const { return static_cast<int>(vertices.size()); }
  const UnitVec& vertex(int i) const { return vertices[((i % n()) + n()) % n()]; }
  Arc side(int i) const { return Arc(vertex(i), vertex(i + 1)); }
  // Direction of (v1 - v0) x (v2 - v1); the antipode of the small cap for a
  // reflex tile.
  UnitVec center() const;
};

enum class Side { kLeft, kRight };

// Regular polygon with one side on the directed arc start -> end and its body
// on `side` of it.  The tile's first two vertices are start, end (left) or
// end, start (right).  Throws std::invalid_argument when the arc length
// differs from spec.side by more than kAngleTol.
PlacedTile place_polygon_on_edge(const RegularPolygonSpec& spec,
                                 const UnitVec& start, const UnitVec& end,
                                 Side side);

// Regular polygon centered at `center` with first vertex `first`.
PlacedTile place_polygon_around(const RegularPolygonSpec& spec,
                                const UnitVec& center, const UnitVec& first);

// Glues a new tile onto side `side_index` of `tile`, outside it.
PlacedTile glue(const PlacedTile& tile, int side_index,
                const RegularPolygonSpec& spec);

// Image under `g`; reflections reverse the vertex order (first vertex kept)
// so the result stays counterclockwise.
PlacedTile transformed(const PlacedTile& tile, const Isometry& g);
std::vector<PlacedTile> transformed(std::span<const PlacedTile> tiles,
                                    const Isometry& g);

// Largest deviation of a tile's side lengths and corner angles from its spec.
double tile_drift(const PlacedTile& tile);

// Throws std::logic_error if tile_drift exceeds `tol`.
void audit_tile(const PlacedTile& tile, double tol = kAngleTol);

struct SideRef {
  int tile = -1;
  int side = -1;
  bool operator==(const SideRef&) const = default;
};

// Two tile sides sharing a sub-arc.  `a -> b` runs along the left tile's side;
// the right tile's side runs the other way.  `full` when the shared arc is
// the whole of both sides.
struct SharedEdge {
  UnitVec a, b;
  SideRef left, right;
  bool full = false;
};

struct SideContacts {
  std::vector<SharedEdge> edges;
  // Collinear sides running the same way over a common stretch: both tiles
  // lie on the same side of it, which is an overlap.
  std::vector<std::pair<SideRef, SideRef>> same_direction;
};

SideContacts side_contacts(std::span<const PlacedTile> tiles);

// Boundary of a union of interior-disjoint tiles.  Corners are where the
// boundary turns; `sides[i]` runs from corners[i] to corners[i+1].  A
// great-circle loop has no corners.
struct BoundaryLoop {
  std::vector<UnitVec> corners;
  std::vector<double> angles;
  std::vector<double> sides;
  double length = 0;
};

std::vector<BoundaryLoop> patch_boundary(std::span<const PlacedTile> tiles);

enum class BigonType { kI, kII, kIII, kIV, kV };

std::string to_string(BigonType type);
double bigon_apex_angle(BigonType type);
// Side length of the tiles in the bigon.
double bigon_tile_side(BigonType type);

struct BigonPatch {
  BigonType type;
  double apex_angle;
  std::vector<PlacedTile> tiles;
  UnitVec apexes[2];
};

// Bigon with an apex at `apex`.  Its first boundary arc leaves the apex in
// the tangent direction `first_direction`; the interior is counterclockwise
// from it.
BigonPatch build_bigon(BigonType type, const UnitVec& apex,
                       const Vec3& first_direction);
// As above with the direction given by an azimuth.  Azimuth 0 points along
// the image of +x under the smallest rotation taking the north pole to the
// apex.
BigonPatch build_bigon(BigonType type, const UnitVec& apex, double azimuth);

struct HemisphereKind {
  enum class Base { kOcta, kCubocta, kIcosidodeca, kMonogon, kIcosidodecaComposed };
  Base base = Base::kOcta;
  int n = 0;  // monogon side count

  std::string to_string() const;
  // Parses "octa", "cubocta", "icosidodeca", "icosidodeca-composed" and
  // "monogon<n>".
  static HemisphereKind parse(std::string_view text);
  bool operator==(const HemisphereKind&) const = default;
};

// Tiles covering the upper hemisphere z >= 0.
std::vector<PlacedTile> build_hemisphere(const HemisphereKind& kind);

// Side of the magic triangle.
double magic_side();
RegularPolygonSpec magic_triangle_spec();
RegularPolygonSpec tri_pent_triangle_spec();
RegularPolygonSpec tri_pent_pentagon_spec();

// 3 pentagons, 3 side triangles and the central triangle filling `magic`.
std::vector<PlacedTile> magic_triangle_decomposition(const PlacedTile& magic);

// The magic triangle covered by `pieces`.  Throws std::invalid_argument when
// the pieces are not 4 tri-pent triangles and 3 tri-pent pentagons whose
// union is a triangle of side 3pi/5.
PlacedTile compose_magic_triangle(std::span<const PlacedTile> pieces);

enum class AppendixKind { kMagicTriangle, kPentagon5Tri, kOctagon, kDecagon };

std::string to_string(AppendixKind kind);

struct AppendixPatch {
  AppendixKind kind;
  RegularPolygonSpec outer;
  std::vector<PlacedTile> tiles;
  BoundaryLoop boundary;
};

// A regular polygon of angle below pi decomposed edge-to-edge into smaller
// regular polygons.
AppendixPatch appendix_decomposition(AppendixKind kind);

// Common side s of the octagon (triangles, squares) and decagon (triangles,
// squares, pentagon) decompositions: angles at each interior vertex add to
// 2pi.
double octagon_decomposition_side();
double decagon_decomposition_side();

}  // namespace sphtile

#endif  // SPHTILE_PATCH_FORGE_H_
