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

// Constructors for every family of non-edge-to-edge tilings, the classical
// edge-to-edge fixtures, and the magic triangle compose/decompose moves.
//
// Poses: kaleidoscopes put the first small tile at the north pole with its
// first vertex at azimuth 0.  Lunar tilings put the polar polygon there;
// sporadic tilings put the common bigon apex there.  Two-hemisphere tilings
// use the equator as the dividing circle.

#ifndef SPHTILE_CATALOG_H_
#define SPHTILE_CATALOG_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sphtile/tiling.h"

namespace sphtile {

enum class KaleidoscopeVariant { kTriTri, kSquareTri, kTriSquare, kPentTri, kTriPent };

std::string to_string(KaleidoscopeVariant v);
KaleidoscopeVariant parse_kaleidoscope(std::string_view text);

// Range of the small tile's angle.  The lower end, where the small tiles
// shrink to points, is excluded.  The upper end, where both tile kinds share
// a side length and the tiling is an edge-to-edge solid, is included.
struct KaleidoscopeRange {
  int small_n;
  int large_n;
  double lo;
  double hi;
  std::string lo_limit;  // solid approached at the lower end
  std::string hi_limit;  // solid reached at the upper end
};
KaleidoscopeRange kaleidoscope_range(KaleidoscopeVariant v);

// Throws std::domain_error naming the limit when the angle is outside the
// range.
Tiling kaleidoscope(KaleidoscopeVariant v, double small_tile_angle);

// Upper hemisphere `top`; `bottom` is turned over onto z <= 0 and rotated by
// `twist` about the polar axis.  twist must lie in [0, 2pi).
Tiling two_hemisphere(const HemisphereKind& top, const HemisphereKind& bottom,
                      double twist);

// polar_n is 3, 4 or 5.  Valid: (II, 3), (II, 5), (IV, 3), (IV, 4).
Tiling lunar(BigonType type, int polar_n);

// order is "I-II-I-III", "I-IV-I-V" or "II-IV-III-V".
Tiling sporadic(std::string_view order);

// Tile ids (ascending) of every 4 triangle + 3 pentagon set, with tri-pent
// tiles, whose union is a triangle of side 3pi/5.
std::vector<std::vector<int>> find_magic_patches(const Tiling& t);

// Replaces the patch by one magic triangle (appended last).
Tiling compose(const Tiling& t, std::span<const int> patch);
// Replaces a magic triangle by its 7 pieces (appended last).
Tiling decompose(const Tiling& t, int tile_id);
// Decomposes every magic triangle.
Tiling decompose_all(const Tiling& t);

// How two interior-disjoint magic patches meet.
enum class PatchRelation { kSideOverlap, kVertexTouch, kOpposite, kApart };
std::string to_string(PatchRelation r);
PatchRelation patch_relation(const Tiling& t, std::span<const int> p,
                             std::span<const int> q);

// The composed tilings of the icosidodecahedron and of the two sporadic
// tilings with a Type V bigon.  `variant` is one of "icosidodeca-1",
// "icosidodeca-2-side", "icosidodeca-2-vertex", "icosidodeca-2-opposite",
// "icosidodeca-3-pairwise", "icosidodeca-3-vertex", "icosidodeca-4",
// "sporadic-I-IV-I-V", "sporadic-II-IV-III-V".
Tiling composed(std::string_view variant);
std::vector<std::string> composed_variants();
// The rigid composed tilings counted as distinct families.
std::vector<Tiling> composed_catalog();

// The decomposed magic triangle plus the complementary triangle.
Tiling magic_triangle_tiling();

// "tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron",
// "cuboctahedron", "icosidodecahedron".
Tiling edge_to_edge_reference(std::string_view name);
std::vector<std::string> reference_names();

struct ParamRange {
  std::string name;
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;
};

struct ManifestEntry {
  std::string family;  // FamilyId text
  std::string group;   // e.g. "kaleidoscope", "composed 2-hemisphere"
  std::vector<ParamRange> params;
  std::map<std::string, double> defaults;
  std::map<std::string, int> expected_species;
  // Nonempty when the tiling is a member of another listed family and is
  // therefore not counted on its own.
  std::string absorbed_into;
  std::string note;
};

// Our reading of the family list: every listed entry, including the four
// absorbed ones.  Entries with empty absorbed_into are the distinct
// families.
std::vector<ManifestEntry> family_manifest();

// Builds any manifest family (or reference fixture) from its text id and
// parameters; missing parameters take the manifest defaults.
Tiling generate(std::string_view family,
                const std::map<std::string, double>& params = {});

}  // namespace sphtile

#endif  // SPHTILE_CATALOG_H_
