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

#include "sphtile/patch_forge.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "sphtile/roots.h"

namespace sphtile {

using std::numbers::pi;

UnitVec PlacedTile::center() const {
  const Vec3 d0 = vertices[1].vec() - vertices[0].vec();
  const Vec3 d1 = vertices[2].vec() - vertices[1].vec();
  return UnitVec(Vec3(d0.cross(d1)));
}

PlacedTile place_polygon_on_edge(const RegularPolygonSpec& spec,
                                 const UnitVec& start, const UnitVec& end,
                                 Side side) {
  if (side == Side::kRight) {
    return place_polygon_on_edge(spec, end, start, Side::kLeft);
  }
  const double len = angular_distance(start, end);
  if (std::abs(len - spec.side) > kAngleTol) {
    throw std::invalid_argument(fmt::format(
        "edge length {:.12f} does not match the {}-gon side {:.12f}", len,
        spec.n, spec.side));
  }
  const double r = inradius(spec.n, std::min(spec.angle, pi));
  const UnitVec mid(start.vec() + end.vec());
  const UnitVec left = Arc(start, end).pole();
  const UnitVec c(std::cos(r) * mid.vec() + std::sin(r) * left.vec());
  PlacedTile t{spec, {start, end}};
  for (int k = 2; k < spec.n; ++k) {
    t.vertices.push_back(
        Isometry::rotation(c, 2 * pi * k / spec.n)(start));
  }
  return t;
}

PlacedTile place_polygon_around(const RegularPolygonSpec& spec,
                                const UnitVec& center, const UnitVec& first) {
  const double r = angular_distance(center, first);
  if (std::abs(r - spec.circumradius) > kAngleTol) {
    throw std::invalid_argument(fmt::format(
        "vertex distance {:.12f} does not match the circumradius {:.12f}", r,
        spec.circumradius));
  }
  PlacedTile t{spec, {first}};
  for (int k = 1; k < spec.n; ++k) {
    t.vertices.push_back(Isometry::rotation(center, 2 * pi * k / spec.n)(first));
  }
  return t;
}

PlacedTile glue(const PlacedTile& tile, int side_index,
                const RegularPolygonSpec& spec) {
  return place_polygon_on_edge(spec, tile.vertex(side_index + 1),
                               tile.vertex(side_index), Side::kLeft);
}

PlacedTile transformed(const PlacedTile& tile, const Isometry& g) {
  PlacedTile out{tile.spec, {}};
  out.vertices.reserve(tile.vertices.size());
  for (const UnitVec& v : tile.vertices) out.vertices.push_back(g(v));
  if (g.is_reflection()) {
    std::reverse(out.vertices.begin() + 1, out.vertices.end());
  }
  return out;
}

std::vector<PlacedTile> transformed(std::span<const PlacedTile> tiles,
                                    const Isometry& g) {
  std::vector<PlacedTile> out;
  out.reserve(tiles.size());
  for (const PlacedTile& t : tiles) out.push_back(transformed(t, g));
  return out;
}

double tile_drift(const PlacedTile& tile) {
  if (tile.n() != tile.spec.n) return INFINITY;
  double worst = 0;
  for (int i = 0; i < tile.n(); ++i) {
    worst = std::max(worst, std::abs(angular_distance(tile.vertex(i),
                                                      tile.vertex(i + 1)) -
                                     tile.spec.side));
    worst = std::max(worst, std::abs(corner_angle(tile.vertex(i - 1),
                                                  tile.vertex(i),
                                                  tile.vertex(i + 1)) -
                                     tile.spec.angle));
  }
  return worst;
}

void audit_tile(const PlacedTile& tile, double tol) {
  const double d = tile_drift(tile);
  if (!(d <= tol)) {
    throw std::logic_error(fmt::format(
        "tile {} deviates from its spec by {:.3e}", tile.spec.label(), d));
  }
}

SideContacts side_contacts(std::span<const PlacedTile> tiles) {
  SideContacts out;
  for (int i = 0; i < static_cast<int>(tiles.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(tiles.size()); ++j) {
      for (int p = 0; p < tiles[i].n(); ++p) {
        const Arc u = tiles[i].side(p);
        for (int q = 0; q < tiles[j].n(); ++q) {
          const Arc v = tiles[j].side(q);
          const ArcIntersection x = arcs_intersect(u, v);
          if (x.kind != ArcIntersection::Kind::kOverlap ||
              x.overlap_length() < kClusterTol) {
            continue;
          }
          if (u.pole().dot(v.pole()) > 0) {
            out.same_direction.push_back({{i, p}, {j, q}});
            continue;
          }
          const double len = x.overlap_length();
          const bool full = std::abs(len - u.length()) < kClusterTol &&
                            std::abs(len - v.length()) < kClusterTol;
          out.edges.push_back({x.first, x.second, {i, p}, {j, q}, full});
        }
      }
    }
  }
  return out;
}

namespace {

struct Piece {
  UnitVec a, b;
};

bool near(const UnitVec& p, const UnitVec& q) {
  return angular_distance(p, q) < kClusterTol;
}

}  // namespace

std::vector<BoundaryLoop> patch_boundary(std::span<const PlacedTile> tiles) {
  const SideContacts contacts = side_contacts(tiles);
  std::vector<Piece> pieces;
  for (int i = 0; i < static_cast<int>(tiles.size()); ++i) {
    for (int p = 0; p < tiles[i].n(); ++p) {
      const Arc side = tiles[i].side(p);
      const double len = side.length();
      std::vector<std::pair<double, double>> covered;
      for (const SharedEdge& e : contacts.edges) {
        if (e.left == SideRef{i, p} || e.right == SideRef{i, p}) {
          double t0 = angular_distance(side.a(), e.a);
          double t1 = angular_distance(side.a(), e.b);
          if (t0 > t1) std::swap(t0, t1);
          covered.emplace_back(t0, t1);
        }
      }
      std::sort(covered.begin(), covered.end());
      double t = 0;
      auto emit = [&](double from, double to) {
        if (to - from > kClusterTol) {
          pieces.push_back({side.point_at(from / len), side.point_at(to / len)});
        }
      };
      for (const auto& [c0, c1] : covered) {
        emit(t, c0);
        t = std::max(t, c1);
      }
      emit(t, len);
    }
  }

  std::vector<BoundaryLoop> loops;
  std::vector<bool> used(pieces.size(), false);
  for (std::size_t start = 0; start < pieces.size(); ++start) {
    if (used[start]) continue;
    std::vector<Piece> chain{pieces[start]};
    used[start] = true;
    while (!near(chain.back().b, chain.front().a)) {
      std::size_t next = pieces.size();
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (!used[k] && near(pieces[k].a, chain.back().b)) {
          next = k;
          break;
        }
      }
      if (next == pieces.size()) break;
      used[next] = true;
      chain.push_back(pieces[next]);
    }
    // Junction k joins chain[k] to chain[k + 1]; keep the real turns.
    BoundaryLoop loop;
    const std::size_t m = chain.size();
    std::vector<std::size_t> corner_at;
    for (std::size_t k = 0; k < m; ++k) {
      const Piece& in = chain[k];
      const Piece& out = chain[(k + 1) % m];
      const double a = corner_angle(in.a, in.b, out.b);
      if (std::abs(a - pi) > kClusterTol) {
        corner_at.push_back(k);
        loop.corners.push_back(in.b);
        loop.angles.push_back(a);
      }
    }
    for (const Piece& p : chain) loop.length += angular_distance(p.a, p.b);
    for (std::size_t c = 0; c < corner_at.size(); ++c) {
      double len = 0;
      std::size_t k = corner_at[c];
      const std::size_t stop = corner_at[(c + 1) % corner_at.size()];
      do {
        k = (k + 1) % m;
        len += angular_distance(chain[k].a, chain[k].b);
      } while (k != stop);
      loop.sides.push_back(len);
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

std::string to_string(BigonType type) {
  static const char* kNames[] = {"I", "II", "III", "IV", "V"};
  return kNames[static_cast<int>(type)];
}

double bigon_apex_angle(BigonType type) {
  switch (type) {
    case BigonType::kI:
      return pi / 2;
    case BigonType::kII:
      return std::acos(1.0 / 3);
    case BigonType::kIII:
      return std::acos(-1.0 / 3);
    case BigonType::kIV:
      return std::atan(2.0);
    case BigonType::kV:
      return pi - std::atan(2.0);
  }
  return 0;
}

double bigon_tile_side(BigonType type) {
  switch (type) {
    case BigonType::kI:
      return pi / 2;
    case BigonType::kII:
    case BigonType::kIII:
      return pi / 3;
    case BigonType::kIV:
    case BigonType::kV:
      return pi / 5;
  }
  return 0;
}

namespace {

UnitVec down(double azimuth, double distance) {
  return UnitVec::spherical(distance, azimuth);
}

// Patch tiles must meet side to side, and the boundary must be the expected
// polygon.
void audit_patch(std::span<const PlacedTile> tiles,
                 std::span<const double> expected_angles,
                 std::span<const double> expected_sides, const char* what) {
  for (const PlacedTile& t : tiles) audit_tile(t);
  const SideContacts c = side_contacts(tiles);
  for (const SharedEdge& e : c.edges) {
    if (!e.full) {
      throw std::logic_error(fmt::format("{}: partial internal edge", what));
    }
  }
  if (!c.same_direction.empty()) {
    throw std::logic_error(fmt::format("{}: overlapping tiles", what));
  }
  const std::vector<BoundaryLoop> loops = patch_boundary(tiles);
  if (loops.size() != 1 ||
      loops[0].corners.size() != expected_angles.size()) {
    throw std::logic_error(fmt::format("{}: unexpected boundary shape", what));
  }
  for (std::size_t k = 0; k < expected_angles.size(); ++k) {
    if (std::abs(loops[0].angles[k] - expected_angles[k]) > kAngleTol ||
        std::abs(loops[0].sides[k] - expected_sides[k]) > kAngleTol) {
      throw std::logic_error(fmt::format("{}: boundary mismatch", what));
    }
  }
}

std::vector<PlacedTile> canonical_bigon(BigonType type) {
  const double s = bigon_tile_side(type);
  const double theta = bigon_apex_angle(type);
  std::vector<PlacedTile> t;
  const UnitVec n = UnitVec::north();
  switch (type) {
    case BigonType::kI: {
      const auto tri = RegularPolygonSpec::from_angle(3, pi / 2);
      t.push_back(place_polygon_on_edge(tri, n, down(0, s), Side::kLeft));
      t.push_back(glue(t[0], 1, tri));
      break;
    }
    case BigonType::kII: {
      const auto tri = RegularPolygonSpec::from_angle(3, theta);
      const auto sq = RegularPolygonSpec::from_angle(4, pi - theta);
      t.push_back(place_polygon_on_edge(tri, n, down(0, s), Side::kLeft));
      t.push_back(glue(t[0], 1, sq));
      t.push_back(glue(t[1], 2, tri));
      break;
    }
    case BigonType::kIII: {
      const auto sq = RegularPolygonSpec::from_angle(4, theta);
      const auto tri = RegularPolygonSpec::from_angle(3, pi - theta);
      t.push_back(place_polygon_on_edge(sq, n, down(0, s), Side::kLeft));
      t.push_back(glue(t[0], 1, tri));
      t.push_back(glue(t[0], 2, tri));
      t.push_back(glue(t[1], 2, sq));
      break;
    }
    case BigonType::kIV: {
      const auto tri = tri_pent_triangle_spec();
      const auto pent = tri_pent_pentagon_spec();
      t.push_back(place_polygon_on_edge(tri, n, down(0, s), Side::kLeft));
      t.push_back(glue(t[0], 1, pent));  // P1
      t.push_back(glue(t[1], 2, tri));
      t.push_back(glue(t[1], 3, tri));
      t.push_back(glue(t[2], 2, pent));  // P2
      t.push_back(glue(t[4], 2, tri));
      break;
    }
    case BigonType::kV: {
      const auto tri = tri_pent_triangle_spec();
      const auto pent = tri_pent_pentagon_spec();
      // The first seven tiles form a decomposed magic triangle with a corner
      // at the apex.
      t.push_back(place_polygon_on_edge(pent, n, down(0, s), Side::kLeft));
      t.push_back(glue(t[0], 1, tri));
      t.push_back(glue(t[0], 3, tri));
      t.push_back(glue(t[0], 2, tri));  // central
      t.push_back(glue(t[1], 2, pent));
      t.push_back(glue(t[2], 1, pent));
      t.push_back(glue(t[4], 3, tri));  // between the two pentagons
      t.push_back(glue(t[4], 2, tri));
      t.push_back(glue(t[5], 3, tri));
      t.push_back(glue(t[7], 2, pent));
      break;
    }
  }
  const double angles[] = {theta, theta};
  const double sides[] = {pi, pi};
  audit_patch(t, angles, sides, "bigon");
  return t;
}

}  // namespace

BigonPatch build_bigon(BigonType type, const UnitVec& apex,
                       const Vec3& first_direction) {
  const Vec3 dir = first_direction - first_direction.dot(apex.vec()) * apex.vec();
  if (dir.norm() < 1e-12) {
    throw std::invalid_argument("build_bigon: direction is not tangent");
  }
  const Isometry g = Isometry::aligning(
      UnitVec::north(), UnitVec(1, 0, 0), apex,
      walk_along(apex, dir.normalized(), pi / 2));
  BigonPatch b{type, bigon_apex_angle(type), {}, {apex, -apex}};
  b.tiles = transformed(canonical_bigon(type), g);
  return b;
}

BigonPatch build_bigon(BigonType type, const UnitVec& apex, double azimuth) {
  const Isometry g = Isometry::minimal_rotation(UnitVec::north(), apex);
  const Vec3 dir = g.matrix() * Vec3(std::cos(azimuth), std::sin(azimuth), 0);
  return build_bigon(type, apex, dir);
}

std::string HemisphereKind::to_string() const {
  switch (base) {
    case Base::kOcta:
      return "octa";
    case Base::kCubocta:
      return "cubocta";
    case Base::kIcosidodeca:
      return "icosidodeca";
    case Base::kMonogon:
      return fmt::format("monogon{}", n);
    case Base::kIcosidodecaComposed:
      return "icosidodeca-composed";
  }
  return "?";
}

HemisphereKind HemisphereKind::parse(std::string_view text) {
  using B = Base;
  if (text == "octa") return {B::kOcta, 0};
  if (text == "cubocta") return {B::kCubocta, 0};
  if (text == "icosidodeca") return {B::kIcosidodeca, 0};
  if (text == "icosidodeca-composed") return {B::kIcosidodecaComposed, 0};
  if (text.starts_with("monogon")) {
    const std::string digits(text.substr(7));
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char c) { return c >= '0' && c <= '9'; })) {
      const int n = std::stoi(digits);
      if (n >= 3) return {B::kMonogon, n};
    }
    throw std::invalid_argument(fmt::format(
        "hemisphere '{}': monogon needs a side count n >= 3", text));
  }
  throw std::invalid_argument(fmt::format("unknown hemisphere kind '{}'", text));
}

namespace {

// Two bigons filling the lune 0 <= longitude <= pi, turned into z >= 0.
std::vector<PlacedTile> lune_pair(BigonType first, BigonType second) {
  std::vector<PlacedTile> tiles =
      build_bigon(first, UnitVec::north(), 0.0).tiles;
  const std::vector<PlacedTile> rest =
      build_bigon(second, UnitVec::north(), bigon_apex_angle(first)).tiles;
  tiles.insert(tiles.end(), rest.begin(), rest.end());
  return transformed(tiles, Isometry::rotation(UnitVec(1, 0, 0), pi / 2));
}

}  // namespace

std::vector<PlacedTile> build_hemisphere(const HemisphereKind& kind) {
  using B = HemisphereKind::Base;
  switch (kind.base) {
    case B::kOcta:
      return lune_pair(BigonType::kI, BigonType::kI);
    case B::kCubocta:
      return lune_pair(BigonType::kII, BigonType::kIII);
    case B::kIcosidodeca:
      return lune_pair(BigonType::kIV, BigonType::kV);
    case B::kIcosidodecaComposed: {
      std::vector<PlacedTile> tiles = lune_pair(BigonType::kIV, BigonType::kV);
      // Tiles 6..12 are the magic set of the Type V bigon; one of its sides
      // lies on the hemisphere boundary.
      const std::vector<PlacedTile> magic(tiles.begin() + 6, tiles.begin() + 13);
      std::vector<PlacedTile> out(tiles.begin(), tiles.begin() + 6);
      out.insert(out.end(), tiles.begin() + 13, tiles.end());
      out.push_back(compose_magic_triangle(magic));
      return out;
    }
    case B::kMonogon: {
      if (kind.n < 3) {
        throw std::invalid_argument("monogon hemisphere needs n >= 3");
      }
      PlacedTile t{RegularPolygonSpec::from_angle(kind.n, pi), {}};
      for (int k = 0; k < kind.n; ++k) {
        t.vertices.push_back(UnitVec::spherical(pi / 2, 2 * pi * k / kind.n));
      }
      return {t};
    }
  }
  return {};
}

double magic_side() { return 3 * pi / 5; }

RegularPolygonSpec magic_triangle_spec() {
  return RegularPolygonSpec::from_side(3, magic_side());
}

RegularPolygonSpec tri_pent_triangle_spec() {
  return RegularPolygonSpec::from_angle(3, std::atan(2.0));
}

RegularPolygonSpec tri_pent_pentagon_spec() {
  return RegularPolygonSpec::from_angle(5, pi - std::atan(2.0));
}

std::vector<PlacedTile> magic_triangle_decomposition(const PlacedTile& magic) {
  if (magic.n() != 3 || tile_drift(PlacedTile{magic_triangle_spec(),
                                              magic.vertices}) > kAngleTol) {
    throw std::invalid_argument(
        "magic_triangle_decomposition: tile is not a triangle of side 3pi/5");
  }
  const auto tri = tri_pent_triangle_spec();
  const auto pent = tri_pent_pentagon_spec();
  const double s = pi / 5;
  std::vector<PlacedTile> out;
  std::vector<UnitVec> inner;
  for (int i = 0; i < 3; ++i) {
    const UnitVec& m = magic.vertex(i);
    const UnitVec& next = magic.vertex(i + 1);
    out.push_back(place_polygon_on_edge(pent, m, walk(m, next, s), Side::kLeft));
  }
  for (int i = 0; i < 3; ++i) {
    const UnitVec& m = magic.vertex(i);
    const UnitVec& next = magic.vertex(i + 1);
    out.push_back(place_polygon_on_edge(tri, walk(m, next, s),
                                        walk(m, next, 2 * s), Side::kLeft));
    inner.push_back(out.back().vertex(2));
  }
  PlacedTile central = place_polygon_on_edge(tri, inner[0], inner[1], Side::kLeft);
  if (!near(central.vertex(2), inner[2])) {
    throw std::logic_error("magic decomposition: central triangle misfit");
  }
  out.push_back(std::move(central));
  return out;
}

PlacedTile compose_magic_triangle(std::span<const PlacedTile> pieces) {
  const auto tri = tri_pent_triangle_spec();
  const auto pent = tri_pent_pentagon_spec();
  int triangles = 0, pentagons = 0;
  for (const PlacedTile& t : pieces) {
    if (t.n() == 3 && std::abs(t.spec.angle - tri.angle) < kAngleTol) ++triangles;
    if (t.n() == 5 && std::abs(t.spec.angle - pent.angle) < kAngleTol) ++pentagons;
  }
  if (pieces.size() != 7 || triangles != 4 || pentagons != 3) {
    throw std::invalid_argument(
        "compose: a magic set is 4 tri-pent triangles and 3 tri-pent pentagons");
  }
  const std::vector<BoundaryLoop> loops = patch_boundary(pieces);
  const RegularPolygonSpec magic = magic_triangle_spec();
  if (loops.size() != 1 || loops[0].corners.size() != 3) {
    throw std::invalid_argument("compose: pieces do not bound a triangle");
  }
  for (int k = 0; k < 3; ++k) {
    if (std::abs(loops[0].sides[k] - magic.side) > 1e-8 ||
        std::abs(loops[0].angles[k] - magic.angle) > 1e-8) {
      throw std::invalid_argument(
          "compose: union is not a triangle of side 3pi/5");
    }
  }
  return PlacedTile{magic, loops[0].corners};
}

std::string to_string(AppendixKind kind) {
  switch (kind) {
    case AppendixKind::kMagicTriangle:
      return "magic-triangle";
    case AppendixKind::kPentagon5Tri:
      return "pentagon-5tri";
    case AppendixKind::kOctagon:
      return "octagon";
    case AppendixKind::kDecagon:
      return "decagon";
  }
  return "?";
}

double octagon_decomposition_side() {
  static const double s = bisect_root(
      [](double x) {
        return angle_from_side(3, x) + 3 * angle_from_side(4, x) - 2 * pi;
      },
      1e-9, pi / 2, 1e-15);
  return s;
}

double decagon_decomposition_side() {
  static const double s = bisect_root(
      [](double x) {
        return angle_from_side(3, x) + 2 * angle_from_side(4, x) +
               angle_from_side(5, x) - 2 * pi;
      },
      1e-9, 2 * pi / 5, 1e-15);
  return s;
}

namespace {

// Central polygon ringed by squares, with triangles in the gaps.
std::vector<PlacedTile> ringed(const RegularPolygonSpec& center_spec,
                               double s) {
  const auto sq = RegularPolygonSpec::from_side(4, s);
  const auto tri = RegularPolygonSpec::from_side(3, s);
  const PlacedTile c = place_polygon_around(
      center_spec, UnitVec::north(),
      UnitVec::spherical(center_spec.circumradius, 0));
  std::vector<PlacedTile> tiles{c};
  for (int i = 0; i < c.n(); ++i) tiles.push_back(glue(c, i, sq));
  for (int i = 0; i < c.n(); ++i) tiles.push_back(glue(tiles[1 + i], 1, tri));
  return tiles;
}

}  // namespace

AppendixPatch appendix_decomposition(AppendixKind kind) {
  AppendixPatch out{kind, {}, {}, {}};
  switch (kind) {
    case AppendixKind::kMagicTriangle: {
      out.outer = magic_triangle_spec();
      out.tiles = magic_triangle_decomposition(place_polygon_around(
          out.outer, UnitVec::north(),
          UnitVec::spherical(out.outer.circumradius, 0)));
      break;
    }
    case AppendixKind::kPentagon5Tri: {
      const auto tri = RegularPolygonSpec::from_angle(3, 2 * pi / 5);
      out.outer = RegularPolygonSpec::from_angle(5, 4 * pi / 5);
      out.tiles.push_back(place_polygon_on_edge(
          tri, UnitVec::north(), UnitVec::spherical(tri.side, 0), Side::kLeft));
      for (int k = 1; k < 5; ++k) {
        out.tiles.push_back(glue(out.tiles.back(), 2, tri));
      }
      break;
    }
    case AppendixKind::kOctagon: {
      const double s = octagon_decomposition_side();
      out.tiles = ringed(RegularPolygonSpec::from_side(4, s), s);
      out.outer = RegularPolygonSpec::from_angle(
          8, angle_from_side(3, s) + angle_from_side(4, s));
      break;
    }
    case AppendixKind::kDecagon: {
      const double s = decagon_decomposition_side();
      out.tiles = ringed(RegularPolygonSpec::from_side(5, s), s);
      out.outer = RegularPolygonSpec::from_angle(
          10, angle_from_side(3, s) + angle_from_side(4, s));
      break;
    }
  }
  const std::vector<double> angles(out.outer.n, out.outer.angle);
  const std::vector<double> sides(out.outer.n, out.outer.side);
  audit_patch(out.tiles, angles, sides, "decomposition");
  out.boundary = patch_boundary(out.tiles).front();
  return out;
}

}  // namespace sphtile
