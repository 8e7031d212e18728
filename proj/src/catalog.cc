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

#include "sphtile/catalog.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace sphtile {

using std::numbers::pi;

namespace {

constexpr double kPhi = std::numbers::phi;

// --- Rotation groups -------------------------------------------------------

enum class Group { kT, kO, kI };

std::vector<Isometry> close_group(const std::vector<Isometry>& gens) {
  std::vector<Isometry> elems{Isometry::identity()};
  auto known = [&](const Isometry& g) {
    return std::any_of(elems.begin(), elems.end(), [&](const Isometry& e) {
      return (e.matrix() - g.matrix()).cwiseAbs().maxCoeff() < 1e-9;
    });
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Isometry& g : gens) {
      const Isometry h = g * elems[i];
      if (!known(h)) elems.push_back(h);
    }
  }
  return elems;
}

const std::vector<Isometry>& group(Group g) {
  static const std::vector<Isometry> kT = close_group(
      {Isometry::rotation(UnitVec(0, 0, 1), pi),
       Isometry::rotation(UnitVec(1, 1, 1), 2 * pi / 3)});
  static const std::vector<Isometry> kO = close_group(
      {Isometry::rotation(UnitVec(0, 0, 1), pi / 2),
       Isometry::rotation(UnitVec(1, 1, 1), 2 * pi / 3)});
  static const std::vector<Isometry> kI = close_group(
      {Isometry::rotation(UnitVec(0, 0, 1), pi),
       Isometry::rotation(UnitVec(1, 1, 1), 2 * pi / 3),
       Isometry::rotation(UnitVec(0, 1, kPhi), 2 * pi / 5)});
  switch (g) {
    case Group::kT:
      return kT;
    case Group::kO:
      return kO;
    case Group::kI:
      return kI;
  }
  return kT;
}

// Images of `seeds` under the group, one tile per distinct center.
std::vector<PlacedTile> orbit(Group g, std::span<const PlacedTile> seeds) {
  std::vector<PlacedTile> out;
  for (const PlacedTile& seed : seeds) {
    std::vector<UnitVec> centers;
    for (const Isometry& e : group(g)) {
      PlacedTile t = transformed(seed, e);
      const UnitVec c = t.center();
      if (std::none_of(centers.begin(), centers.end(), [&](const UnitVec& d) {
            return angular_distance(c, d) < kClusterTol;
          })) {
        centers.push_back(c);
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

// Axes of n-fold symmetry, as the orbit of one known axis.  For T the
// 3-fold axes split into two classes; `antipodal_class` picks the second.
std::vector<UnitVec> axes(Group g, int fold, bool antipodal_class = false) {
  Vec3 seed(1, 1, 1);
  if (fold == 4) seed = Vec3(0, 0, 1);
  if (fold == 5) seed = Vec3(0, 1, kPhi);
  if (antipodal_class) seed = -seed;
  std::vector<UnitVec> out;
  for (const Isometry& e : group(g)) {
    const UnitVec p = e(UnitVec(seed));
    if (std::none_of(out.begin(), out.end(), [&](const UnitVec& q) {
          return angular_distance(p, q) < kClusterTol;
        })) {
      out.push_back(p);
    }
  }
  return out;
}

UnitVec nearest(const UnitVec& p, const std::vector<UnitVec>& candidates) {
  return *std::min_element(candidates.begin(), candidates.end(),
                           [&](const UnitVec& a, const UnitVec& b) {
                             return angular_distance(p, a) <
                                    angular_distance(p, b);
                           });
}

struct KaleidoscopeSetup {
  KaleidoscopeRange range;
  Group group;
  int small_fold;
  int large_fold;
};

KaleidoscopeSetup setup(KaleidoscopeVariant v) {
  using V = KaleidoscopeVariant;
  const double t = std::atan(2.0);
  switch (v) {
    case V::kTriTri:
      return {{3, 3, pi / 3, pi / 2, "tetrahedron", "octahedron"},
              Group::kT, 3, 3};
    case V::kSquareTri:
      return {{4, 3, pi / 2, std::acos(-1.0 / 3), "octahedron", "cuboctahedron"},
              Group::kO, 4, 3};
    case V::kTriSquare:
      return {{3, 4, pi / 3, std::acos(1.0 / 3), "cube", "cuboctahedron"},
              Group::kO, 3, 4};
    case V::kPentTri:
      return {{5, 3, 3 * pi / 5, pi - t, "icosahedron", "icosidodecahedron"},
              Group::kI, 5, 3};
    case V::kTriPent:
      return {{3, 5, pi / 3, t, "dodecahedron", "icosidodecahedron"},
              Group::kI, 3, 5};
  }
  throw std::invalid_argument("unknown kaleidoscope variant");
}

}  // namespace

// --- Kaleidoscopes ---------------------------------------------------------

std::string to_string(KaleidoscopeVariant v) {
  static const char* kNames[] = {"tri-tri", "square-tri", "tri-square",
                                 "pent-tri", "tri-pent"};
  return kNames[static_cast<int>(v)];
}

KaleidoscopeVariant parse_kaleidoscope(std::string_view text) {
  for (int i = 0; i < 5; ++i) {
    const auto v = static_cast<KaleidoscopeVariant>(i);
    if (text == to_string(v)) return v;
  }
  throw std::invalid_argument(
      fmt::format("unknown kaleidoscope variant '{}'", text));
}

KaleidoscopeRange kaleidoscope_range(KaleidoscopeVariant v) {
  return setup(v).range;
}

Tiling kaleidoscope(KaleidoscopeVariant v, double small_tile_angle) {
  const KaleidoscopeSetup k = setup(v);
  const KaleidoscopeRange& r = k.range;
  const double a = small_tile_angle;
  if (!(a > r.lo)) {
    throw std::domain_error(fmt::format(
        "kaleidoscope {}: small tile angle {:.6f} rad must exceed {:.6f} rad; "
        "the small tiles vanish at the {} limit",
        to_string(v), a, r.lo, r.lo_limit));
  }
  if (a > r.hi + 1e-12) {
    throw std::domain_error(fmt::format(
        "kaleidoscope {}: small tile angle {:.6f} rad must not exceed "
        "{:.6f} rad, where the family reaches the {} limit",
        to_string(v), a, r.hi, r.hi_limit));
  }
  const auto small = RegularPolygonSpec::from_angle(r.small_n, std::min(a, r.hi));
  const auto large = RegularPolygonSpec::from_angle(r.large_n, pi - small.angle);

  // Pinwheel seed: each large tile has a corner at a small-tile corner and
  // runs along the small tile's side past its far end.
  const PlacedTile s = place_polygon_around(
      small, UnitVec::north(), UnitVec::spherical(small.circumradius, 0));
  const UnitVec s0 = s.vertex(0);
  const PlacedTile l = place_polygon_on_edge(
      large, s0, walk(s0, s.vertex(1), large.side), Side::kRight);

  const bool t_group = k.group == Group::kT;
  const UnitVec a_axis = axes(k.group, k.small_fold).front();
  const UnitVec b_axis = nearest(a_axis, axes(k.group, k.large_fold, t_group));
  const double want = angular_distance(a_axis, b_axis);
  const double got = angular_distance(s.center(), l.center());
  if (std::abs(want - got) > 1e-9) {
    throw ConstructionError(fmt::format(
        "kaleidoscope {}: tile centers {:.12f} apart, symmetry axes {:.12f}",
        to_string(v), got, want));
  }
  const Isometry h = Isometry::aligning(s.center(), l.center(), a_axis, b_axis);
  const PlacedTile seeds[] = {transformed(s, h), transformed(l, h)};
  Tiling t;
  t.tiles = transformed(orbit(k.group, seeds), h.inverse());
  t.tiles[0] = s;
  t.family = {FamilyClass::kKaleidoscope, to_string(v)};
  t.parameters["angle"] = small.angle;
  t.provenance.push_back(fmt::format(
      "small {} at the pole, large {} pinwheeled on its sides, orbit under the "
      "rotation group",
      small.label(), large.label()));
  return t;
}

// --- Two-hemisphere, lunar, sporadic ---------------------------------------

Tiling two_hemisphere(const HemisphereKind& top, const HemisphereKind& bottom,
                      double twist) {
  if (!(twist >= 0 && twist < 2 * pi)) {
    throw std::domain_error(
        fmt::format("twist {:.6f} rad must lie in [0, 2pi)", twist));
  }
  Tiling t;
  t.tiles = build_hemisphere(top);
  const Isometry flip = Isometry::rotation(UnitVec(0, 0, 1), twist) *
                        Isometry::rotation(UnitVec(1, 0, 0), pi);
  const std::vector<PlacedTile> lower =
      transformed(build_hemisphere(bottom), flip);
  t.tiles.insert(t.tiles.end(), lower.begin(), lower.end());
  t.family = {FamilyClass::kTwoHemisphere,
              top.to_string() + "+" + bottom.to_string()};
  t.parameters["twist"] = twist;
  t.provenance.push_back("upper hemisphere " + top.to_string());
  t.provenance.push_back(fmt::format("lower hemisphere {} turned over, twist {}",
                                     bottom.to_string(), twist));
  return t;
}

namespace {

std::string polar_name(int n) {
  switch (n) {
    case 3:
      return "triangle";
    case 4:
      return "square";
    case 5:
      return "pentagon";
  }
  return fmt::format("{}-gon", n);
}

}  // namespace

Tiling lunar(BigonType type, int polar_n) {
  const bool ok = (type == BigonType::kII && (polar_n == 3 || polar_n == 5)) ||
                  (type == BigonType::kIV && (polar_n == 3 || polar_n == 4));
  if (!ok) {
    throw std::invalid_argument(fmt::format(
        "lunar tiling with Type {} bigons and a polar {} does not exist",
        to_string(type), polar_name(polar_n)));
  }
  const double theta = bigon_apex_angle(type);
  const auto polar = RegularPolygonSpec::from_angle(polar_n, pi - theta);
  const PlacedTile top = place_polygon_around(
      polar, UnitVec::north(), UnitVec::spherical(polar.circumradius, 0));
  Tiling t;
  t.tiles.push_back(top);
  for (int i = 0; i < polar_n; ++i) {
    const UnitVec& v = top.vertex(i);
    const Vec3 along = -tangent_toward(v, top.vertex(i - 1));
    const BigonPatch b = build_bigon(type, v, along);
    t.tiles.insert(t.tiles.end(), b.tiles.begin(), b.tiles.end());
  }
  PlacedTile bottom{polar, {}};
  for (int i = 0; i < polar_n; ++i) bottom.vertices.push_back(-top.vertex(-i));
  t.tiles.push_back(bottom);
  t.family = {FamilyClass::kLunar,
              to_string(type) + "-" + polar_name(polar_n)};
  t.provenance.push_back(fmt::format("polar {} at the north pole, {} Type {} "
                                     "bigons on its corners, antipodal polar "
                                     "tile",
                                     polar.label(), polar_n, to_string(type)));
  return t;
}

Tiling sporadic(std::string_view order) {
  static const std::map<std::string, std::vector<BigonType>, std::less<>>
      kOrders = {
          {"I-II-I-III",
           {BigonType::kI, BigonType::kII, BigonType::kI, BigonType::kIII}},
          {"I-IV-I-V",
           {BigonType::kI, BigonType::kIV, BigonType::kI, BigonType::kV}},
          {"II-IV-III-V",
           {BigonType::kII, BigonType::kIV, BigonType::kIII, BigonType::kV}},
      };
  const auto it = kOrders.find(order);
  if (it == kOrders.end()) {
    throw std::invalid_argument(fmt::format(
        "'{}' is not a sporadic order (I-II-I-III, I-IV-I-V, II-IV-III-V)",
        order));
  }
  Tiling t;
  double azimuth = 0;
  for (BigonType b : it->second) {
    const BigonPatch p = build_bigon(b, UnitVec::north(), azimuth);
    t.tiles.insert(t.tiles.end(), p.tiles.begin(), p.tiles.end());
    azimuth += p.apex_angle;
  }
  if (std::abs(azimuth - 2 * pi) > 1e-12) {
    throw ConstructionError(
        fmt::format("sporadic {}: apex angles sum to {}", order, azimuth));
  }
  t.family = {FamilyClass::kSporadic, std::string(order)};
  t.provenance.push_back(fmt::format("bigons {} around the north pole", order));
  return t;
}

// --- Magic triangles -------------------------------------------------------

namespace {

bool is_tri_pent_triangle(const PlacedTile& t) {
  return t.n() == 3 && std::abs(t.spec.angle - std::atan(2.0)) < kAngleTol;
}

bool is_tri_pent_pentagon(const PlacedTile& t) {
  return t.n() == 5 && std::abs(t.spec.angle - (pi - std::atan(2.0))) < kAngleTol;
}

std::vector<PlacedTile> pick(const Tiling& t, std::span<const int> ids) {
  std::vector<PlacedTile> out;
  for (int id : ids) {
    if (id < 0 || id >= static_cast<int>(t.tiles.size())) {
      throw std::invalid_argument(fmt::format("tile id {} out of range", id));
    }
    out.push_back(t.tiles[id]);
  }
  return out;
}

// Composes several interior-disjoint patches at once.
Tiling compose_sets(const Tiling& t, const std::vector<std::vector<int>>& sets) {
  std::set<int> removed;
  std::vector<PlacedTile> magic;
  for (const std::vector<int>& s : sets) {
    std::set<int> own(s.begin(), s.end());
    if (own.size() != s.size()) {
      throw std::invalid_argument("compose: repeated tile id in patch");
    }
    for (int id : s) {
      if (!removed.insert(id).second) {
        throw std::invalid_argument("compose: patches share a tile");
      }
    }
    magic.push_back(compose_magic_triangle(pick(t, s)));
  }
  Tiling out = t;
  out.tiles.clear();
  for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
    if (!removed.count(i)) out.tiles.push_back(t.tiles[i]);
  }
  out.tiles.insert(out.tiles.end(), magic.begin(), magic.end());
  for (const std::vector<int>& s : sets) {
    out.provenance.push_back(fmt::format("compose {}", s));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> find_magic_patches(const Tiling& t) {
  const SideContacts contacts = side_contacts(t.tiles);
  const int n = static_cast<int>(t.tiles.size());
  std::vector<std::set<int>> adj(n);
  for (const SharedEdge& e : contacts.edges) {
    if (!e.full) continue;
    adj[e.left.tile].insert(e.right.tile);
    adj[e.right.tile].insert(e.left.tile);
  }
  std::set<std::vector<int>> found;
  for (int c = 0; c < n; ++c) {
    if (!is_tri_pent_triangle(t.tiles[c])) continue;
    std::vector<int> pents;
    for (int j : adj[c]) {
      if (is_tri_pent_pentagon(t.tiles[j])) pents.push_back(j);
    }
    if (pents.size() != 3) continue;
    std::vector<int> set{c, pents[0], pents[1], pents[2]};
    for (int a = 0; a < 3; ++a) {
      const int p = pents[a], q = pents[(a + 1) % 3];
      for (int j : adj[p]) {
        if (j != c && adj[q].count(j) && is_tri_pent_triangle(t.tiles[j])) {
          set.push_back(j);
          break;
        }
      }
    }
    std::sort(set.begin(), set.end());
    if (set.size() != 7 || std::adjacent_find(set.begin(), set.end()) != set.end()) {
      continue;
    }
    try {
      compose_magic_triangle(pick(t, set));
      found.insert(set);
    } catch (const std::invalid_argument&) {
    }
  }
  return {found.begin(), found.end()};
}

Tiling compose(const Tiling& t, std::span<const int> patch) {
  return compose_sets(t, {std::vector<int>(patch.begin(), patch.end())});
}

Tiling decompose(const Tiling& t, int tile_id) {
  if (tile_id < 0 || tile_id >= static_cast<int>(t.tiles.size())) {
    throw std::invalid_argument(fmt::format("tile id {} out of range", tile_id));
  }
  if (species(t.tiles[tile_id]) != "magic-triangle") {
    throw std::invalid_argument(
        fmt::format("tile {} is not a magic triangle", tile_id));
  }
  Tiling out = t;
  out.tiles.erase(out.tiles.begin() + tile_id);
  const std::vector<PlacedTile> pieces =
      magic_triangle_decomposition(t.tiles[tile_id]);
  out.tiles.insert(out.tiles.end(), pieces.begin(), pieces.end());
  out.provenance.push_back(fmt::format("decompose {}", tile_id));
  return out;
}

Tiling decompose_all(const Tiling& t) {
  Tiling out = t;
  for (;;) {
    const auto it = std::find_if(out.tiles.begin(), out.tiles.end(),
                                 [](const PlacedTile& p) {
                                   return species(p) == "magic-triangle";
                                 });
    if (it == out.tiles.end()) return out;
    out = decompose(out, static_cast<int>(it - out.tiles.begin()));
  }
}

std::string to_string(PatchRelation r) {
  switch (r) {
    case PatchRelation::kSideOverlap:
      return "side-overlap";
    case PatchRelation::kVertexTouch:
      return "vertex-touch";
    case PatchRelation::kOpposite:
      return "opposite";
    case PatchRelation::kApart:
      return "apart";
  }
  return "?";
}

PatchRelation patch_relation(const Tiling& t, std::span<const int> p,
                             std::span<const int> q) {
  for (int a : p) {
    if (std::find(q.begin(), q.end(), a) != q.end()) {
      throw std::invalid_argument("patch_relation: patches share a tile");
    }
  }
  const PlacedTile m[] = {compose_magic_triangle(pick(t, p)),
                          compose_magic_triangle(pick(t, q))};
  double shared = 0;
  for (const SharedEdge& e : side_contacts(m).edges) {
    shared += angular_distance(e.a, e.b);
  }
  if (shared > kClusterTol) return PatchRelation::kSideOverlap;
  for (const UnitVec& v : m[0].vertices) {
    for (int s = 0; s < 3; ++s) {
      if (distance_to_arc(v, m[1].side(s)) < kClusterTol) {
        return PatchRelation::kVertexTouch;
      }
    }
  }
  for (const UnitVec& v : m[1].vertices) {
    for (int s = 0; s < 3; ++s) {
      if (distance_to_arc(v, m[0].side(s)) < kClusterTol) {
        return PatchRelation::kVertexTouch;
      }
    }
  }
  if (m[0].center().dot(m[1].center()) < -1 + 1e-12) {
    return PatchRelation::kOpposite;
  }
  return PatchRelation::kApart;
}

namespace {

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return common.empty();
}

// First set of `k` pairwise-disjoint patches whose pairwise relations,
// sorted, equal `want`.
std::vector<std::vector<int>> choose_patches(
    const Tiling& t, const std::vector<std::vector<int>>& patches, int k,
    std::vector<PatchRelation> want) {
  std::sort(want.begin(), want.end());
  const int n = static_cast<int>(patches.size());
  std::vector<int> idx;
  std::vector<std::vector<int>> result;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(idx.size()) == k) {
      std::vector<PatchRelation> rel;
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
          rel.push_back(patch_relation(t, patches[idx[a]], patches[idx[b]]));
        }
      }
      std::sort(rel.begin(), rel.end());
      if (!want.empty() && rel != want) return false;
      for (int i : idx) result.push_back(patches[i]);
      return true;
    }
    for (int i = start; i < n; ++i) {
      if (std::all_of(idx.begin(), idx.end(), [&](int j) {
            return disjoint(patches[i], patches[j]);
          })) {
        idx.push_back(i);
        if (self(self, i + 1)) return true;
        idx.pop_back();
      }
    }
    return false;
  };
  if (!rec(rec, 0)) {
    throw ConstructionError(fmt::format(
        "no {} disjoint magic patches with the requested relations", k));
  }
  return result;
}

}  // namespace

std::vector<std::string> composed_variants() {
  return {"icosidodeca-1",          "icosidodeca-2-side",
          "icosidodeca-2-vertex",   "icosidodeca-2-opposite",
          "icosidodeca-3-pairwise", "icosidodeca-3-vertex",
          "icosidodeca-4",          "sporadic-I-IV-I-V",
          "sporadic-II-IV-III-V"};
}

Tiling composed(std::string_view variant) {
  using R = PatchRelation;
  Tiling base;
  std::vector<std::vector<int>> sets;
  if (variant.starts_with("sporadic-")) {
    base = sporadic(variant.substr(9));
    const auto patches = find_magic_patches(base);
    if (patches.empty()) {
      throw ConstructionError(fmt::format("{} has no magic patch", variant));
    }
    sets = {patches.front()};
  } else if (variant.starts_with("icosidodeca-")) {
    base = edge_to_edge_reference("icosidodecahedron");
    const auto patches = find_magic_patches(base);
    const std::string_view rest = variant.substr(12);
    if (rest == "1") {
      sets = {patches.front()};
    } else if (rest == "2-side") {
      sets = choose_patches(base, patches, 2, {R::kSideOverlap});
    } else if (rest == "2-vertex") {
      sets = choose_patches(base, patches, 2, {R::kVertexTouch});
    } else if (rest == "2-opposite") {
      sets = choose_patches(base, patches, 2, {R::kOpposite});
    } else if (rest == "3-pairwise") {
      sets = choose_patches(base, patches, 3,
                            {R::kSideOverlap, R::kSideOverlap, R::kSideOverlap});
    } else if (rest == "3-vertex") {
      sets = choose_patches(base, patches, 3,
                            {R::kSideOverlap, R::kSideOverlap, R::kVertexTouch});
    } else if (rest == "4") {
      sets = choose_patches(base, patches, 4, {});
    }
  }
  if (sets.empty()) {
    throw std::invalid_argument(
        fmt::format("unknown composed variant '{}'", variant));
  }
  Tiling t = compose_sets(base, sets);
  t.family = {FamilyClass::kComposed, std::string(variant)};
  t.parameters.clear();
  return t;
}

std::vector<Tiling> composed_catalog() {
  std::vector<Tiling> out;
  for (const char* v :
       {"icosidodeca-1", "icosidodeca-2-side", "icosidodeca-2-vertex",
        "icosidodeca-3-pairwise", "icosidodeca-3-vertex", "sporadic-I-IV-I-V",
        "sporadic-II-IV-III-V"}) {
    out.push_back(composed(v));
  }
  return out;
}

Tiling magic_triangle_tiling() {
  const RegularPolygonSpec spec = magic_triangle_spec();
  const PlacedTile magic = place_polygon_around(
      spec, UnitVec::north(), UnitVec::spherical(spec.circumradius, 0));
  Tiling t;
  t.tiles = magic_triangle_decomposition(magic);
  PlacedTile rest{spec.complement(),
                  {magic.vertex(0), magic.vertex(2), magic.vertex(1)}};
  t.tiles.push_back(std::move(rest));
  t.family = {FamilyClass::kMagicTriangleTiling, ""};
  t.provenance.push_back(
      "magic triangle at the north pole, decomposed; complement tile");
  return t;
}

// --- Edge-to-edge fixtures -------------------------------------------------

std::vector<std::string> reference_names() {
  return {"tetrahedron", "octahedron",    "cube",
          "icosahedron", "dodecahedron",  "cuboctahedron",
          "icosidodecahedron"};
}

Tiling edge_to_edge_reference(std::string_view name) {
  struct Seed {
    int n;
    double angle;
    Vec3 center;
    Vec3 vertex;
  };
  const double t = std::atan(2.0);
  std::vector<Seed> seeds;
  Group g = Group::kO;
  if (name == "tetrahedron") {
    g = Group::kT;
    seeds = {{3, 2 * pi / 3, Vec3(-1, -1, -1), Vec3(1, -1, -1)}};
  } else if (name == "octahedron") {
    seeds = {{3, pi / 2, Vec3(1, 1, 1), Vec3(1, 0, 0)}};
  } else if (name == "cube") {
    seeds = {{4, 2 * pi / 3, Vec3(0, 0, 1), Vec3(1, 1, 1)}};
  } else if (name == "icosahedron") {
    g = Group::kI;
    seeds = {{3, 2 * pi / 5, Vec3(1, 1, 1), Vec3(0, 1, kPhi)}};
  } else if (name == "dodecahedron") {
    g = Group::kI;
    seeds = {{5, 2 * pi / 3, Vec3(0, 1, kPhi), Vec3(1, 1, 1)}};
  } else if (name == "cuboctahedron") {
    seeds = {{3, std::acos(1.0 / 3), Vec3(1, 1, 1), Vec3(1, 1, 0)},
             {4, std::acos(-1.0 / 3), Vec3(0, 0, 1), Vec3(1, 0, 1)}};
  } else if (name == "icosidodecahedron") {
    g = Group::kI;
    seeds = {{3, t, Vec3(1, 1, 1), Vec3(1, 1 + kPhi, kPhi)},
             {5, pi - t, Vec3(0, 1, kPhi), Vec3(0, 0, 1)}};
  } else {
    throw std::invalid_argument(
        fmt::format("unknown reference tiling '{}'", name));
  }
  std::vector<PlacedTile> placed;
  for (const Seed& s : seeds) {
    placed.push_back(place_polygon_around(
        RegularPolygonSpec::from_angle(s.n, s.angle), UnitVec(s.center),
        UnitVec(s.vertex)));
  }
  Tiling out;
  out.tiles = orbit(g, placed);
  out.family = {FamilyClass::kReference, std::string(name)};
  out.provenance.push_back("orbit of seed faces under the rotation group");
  return out;
}

// --- Manifest and dispatch -------------------------------------------------

namespace {

constexpr double kDefaultTwist = 0.3;

std::map<std::string, int> hemisphere_species(const HemisphereKind& h) {
  using B = HemisphereKind::Base;
  switch (h.base) {
    case B::kOcta:
      return {{"triangle", 4}};
    case B::kCubocta:
      return {{"triangle", 4}, {"square", 3}};
    case B::kIcosidodeca:
      return {{"triangle", 10}, {"pentagon", 6}};
    case B::kIcosidodecaComposed:
      return {{"triangle", 6}, {"pentagon", 3}, {"magic-triangle", 1}};
    case B::kMonogon:
      return {{h.n == 3   ? "triangle"
               : h.n == 4 ? "square"
               : h.n == 5 ? "pentagon"
                          : fmt::format("{}-gon", h.n),
               1}};
  }
  return {};
}

std::map<std::string, int> add(std::map<std::string, int> a,
                               const std::map<std::string, int>& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

}  // namespace

std::vector<ManifestEntry> family_manifest() {
  std::vector<ManifestEntry> out;
  for (int i = 0; i < 5; ++i) {
    const auto v = static_cast<KaleidoscopeVariant>(i);
    const KaleidoscopeRange r = kaleidoscope_range(v);
    ManifestEntry e;
    e.family = "kaleidoscope:" + to_string(v);
    e.group = "kaleidoscope";
    e.params = {{"angle", r.lo, r.hi, true, false}};
    e.defaults = {{"angle", 0.5 * (r.lo + r.hi)}};
    const int small_count = r.small_n == 3 && r.large_n == 3 ? 4
                            : r.small_n == 4 || r.large_n == 4
                                ? (r.small_n == 4 ? 6 : 8)
                                : (r.small_n == 5 ? 12 : 20);
    const int large_count = r.small_n == 3 && r.large_n == 3 ? 4
                            : r.small_n == 4 || r.large_n == 4
                                ? (r.large_n == 4 ? 6 : 8)
                                : (r.large_n == 5 ? 12 : 20);
    const auto name = [](int n) {
      return n == 3 ? "triangle" : n == 4 ? "square" : "pentagon";
    };
    e.expected_species[name(r.small_n)] += small_count;
    e.expected_species[name(r.large_n)] += large_count;
    e.note = fmt::format("angle is the small tile's; upper end is the {}",
                         r.hi_limit);
    out.push_back(e);
  }

  const char* plain[] = {"octa", "cubocta", "icosidodeca", "monogon7"};
  auto hemi_entry = [&](const std::string& a, const std::string& b,
                        const std::string& group) {
    ManifestEntry e;
    e.family = "two-hemisphere:" + a + "+" + b;
    e.group = group;
    e.params = {{"twist", 0, 2 * pi, false, true}};
    e.defaults = {{"twist", kDefaultTwist}};
    e.expected_species = add(hemisphere_species(HemisphereKind::parse(a)),
                             hemisphere_species(HemisphereKind::parse(b)));
    if (a.starts_with("monogon") || b.starts_with("monogon")) {
      e.note = "monogon side count n >= 3 is free; n = 7 (and 5) listed";
    }
    return e;
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const std::string b = (i == 3 && j == 3) ? "monogon5" : plain[j];
      out.push_back(hemi_entry(plain[i], b, "2-hemisphere"));
    }
  }
  for (const char* other : {"octa", "cubocta", "icosidodeca", "monogon7",
                            "icosidodeca-composed"}) {
    out.push_back(hemi_entry("icosidodeca-composed", other,
                             "composed 2-hemisphere"));
  }

  const std::pair<const char*, std::map<std::string, int>> lunars[] = {
      {"II-triangle", {{"triangle", 8}, {"square", 3}}},
      {"II-pentagon", {{"triangle", 10}, {"square", 5}, {"pentagon", 2}}},
      {"IV-triangle",
       {{"triangle", 12}, {"pentagon", 6}, {"magic-triangle", 2}}},
      {"IV-square", {{"triangle", 16}, {"pentagon", 8}, {"square", 2}}},
  };
  for (const auto& [v, species] : lunars) {
    ManifestEntry e;
    e.family = std::string("lunar:") + v;
    e.group = "lunar";
    e.expected_species = species;
    if (std::string_view(v) == "IV-triangle") {
      e.absorbed_into =
          "two-hemisphere:icosidodeca-composed+icosidodeca-composed";
      e.note = "polar triangles are magic triangles";
    }
    out.push_back(e);
  }

  const std::pair<const char*, std::map<std::string, int>> sporadics[] = {
      {"I-II-I-III", {{"triangle", 8}, {"square", 3}}},
      {"I-IV-I-V", {{"triangle", 14}, {"pentagon", 6}}},
      {"II-IV-III-V", {{"triangle", 14}, {"square", 3}, {"pentagon", 6}}},
  };
  for (const auto& [v, species] : sporadics) {
    ManifestEntry e;
    e.family = std::string("sporadic:") + v;
    e.group = "sporadic";
    e.expected_species = species;
    out.push_back(e);
  }

  for (const std::string& v : composed_variants()) {
    if (v == "icosidodeca-2-opposite" || v == "icosidodeca-4") continue;
    ManifestEntry e;
    e.family = "composed:" + v;
    e.group = "composed";
    if (v.starts_with("icosidodeca-")) {
      const int k = v[12] - '0';
      e.expected_species = {{"triangle", 20 - 4 * k},
                            {"pentagon", 12 - 3 * k},
                            {"magic-triangle", k}};
      if (k == 1) {
        e.absorbed_into = "two-hemisphere:icosidodeca-composed+icosidodeca";
      } else if (k == 2) {
        e.absorbed_into =
            "two-hemisphere:icosidodeca-composed+icosidodeca-composed";
      }
    } else if (v == "sporadic-I-IV-I-V") {
      e.expected_species = {{"triangle", 10}, {"pentagon", 3},
                            {"magic-triangle", 1}};
    } else {
      e.expected_species = {{"triangle", 10}, {"square", 3}, {"pentagon", 3},
                            {"magic-triangle", 1}};
    }
    out.push_back(e);
  }

  ManifestEntry m;
  m.family = "magic-triangle";
  m.group = "magic triangle";
  m.expected_species = {{"triangle", 4}, {"pentagon", 3}, {"complement", 1}};
  out.push_back(m);
  return out;
}

Tiling generate(std::string_view family,
                const std::map<std::string, double>& params) {
  const FamilyId id = FamilyId::parse(family);
  auto only = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : params) {
      if (std::none_of(allowed.begin(), allowed.end(),
                       [&](const char* a) { return k == a; })) {
        throw std::invalid_argument(fmt::format(
            "family {} does not take parameter '{}'", family, k));
      }
    }
  };
  auto get = [&](const char* key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  switch (id.cls) {
    case FamilyClass::kKaleidoscope: {
      only({"angle"});
      const KaleidoscopeVariant v = parse_kaleidoscope(id.variant);
      const KaleidoscopeRange r = kaleidoscope_range(v);
      return kaleidoscope(v, get("angle", 0.5 * (r.lo + r.hi)));
    }
    case FamilyClass::kTwoHemisphere: {
      only({"twist"});
      const std::size_t plus = id.variant.find('+');
      if (plus == std::string::npos) {
        throw std::invalid_argument(fmt::format(
            "two-hemisphere variant '{}' must be top+bottom", id.variant));
      }
      return two_hemisphere(
          HemisphereKind::parse(std::string_view(id.variant).substr(0, plus)),
          HemisphereKind::parse(std::string_view(id.variant).substr(plus + 1)),
          get("twist", kDefaultTwist));
    }
    case FamilyClass::kLunar: {
      only({});
      const std::size_t dash = id.variant.find('-');
      const std::string type = id.variant.substr(0, dash);
      const std::string polar =
          dash == std::string::npos ? "" : id.variant.substr(dash + 1);
      const BigonType b = type == "II"   ? BigonType::kII
                          : type == "IV" ? BigonType::kIV
                                         : BigonType::kI;
      const int n = polar == "triangle" ? 3
                    : polar == "square" ? 4
                    : polar == "pentagon" ? 5
                                          : 0;
      return lunar(b, n);
    }
    case FamilyClass::kSporadic:
      only({});
      return sporadic(id.variant);
    case FamilyClass::kComposed:
      only({});
      return composed(id.variant);
    case FamilyClass::kMagicTriangleTiling:
      only({});
      return magic_triangle_tiling();
    case FamilyClass::kReference:
      only({});
      return edge_to_edge_reference(id.variant);
  }
  throw std::invalid_argument(fmt::format("unknown family '{}'", family));
}

}  // namespace sphtile
