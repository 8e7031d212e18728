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

#include "sphtile/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include <boost/algorithm/string.hpp>
#include <fmt/format.h>

namespace sphtile {

using std::numbers::pi;

namespace {

constexpr double kSideTol = 1e-9;

double parse_positive(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v > 0)) {
    throw std::invalid_argument(
        fmt::format("tolerance: '{}' is not a positive number", s));
  }
  return v;
}

double measured_angle(const PlacedTile& t, int i) {
  return corner_angle(t.vertex(i - 1), t.vertex(i), t.vertex(i + 1));
}

// Points just inside `t`: its center, a point on each corner bisector and a
// point off each side midpoint.
std::vector<UnitVec> probes(const PlacedTile& t) {
  const UnitVec c = t.center();
  const double step = std::min(1e-3, 0.05 * std::min(t.spec.side, 1.0));
  std::vector<UnitVec> out{c};
  for (int i = 0; i < t.n(); ++i) {
    out.push_back(walk(t.vertex(i), c, step));
    const UnitVec mid = t.side(i).point_at(0.5);
    out.push_back(walk_along(mid, t.side(i).pole().vec(), step));
  }
  return out;
}

bool near_endpoint(const UnitVec& p, const Arc& a, double tol) {
  return angular_distance(p, a.a()) < tol || angular_distance(p, a.b()) < tol;
}

std::vector<OverlapPair> find_overlaps(const Tiling& t,
                                       const SideContacts& contacts) {
  std::map<std::pair<int, int>, std::string> found;
  auto note = [&](int a, int b, std::string why) {
    found.emplace(std::minmax(a, b), std::move(why));
  };
  for (const auto& [p, q] : contacts.same_direction) {
    note(p.tile, q.tile,
         fmt::format("sides {}.{} and {}.{} run the same way", p.tile, p.side,
                     q.tile, q.side));
  }
  const int n = static_cast<int>(t.tiles.size());
  std::vector<std::vector<UnitVec>> probe(n);
  for (int i = 0; i < n; ++i) probe[i] = probes(t.tiles[i]);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (found.count({i, j})) continue;
      const PlacedTile& a = t.tiles[i];
      const PlacedTile& b = t.tiles[j];
      bool hit = false;
      for (int s = 0; s < a.n() && !hit; ++s) {
        for (int r = 0; r < b.n() && !hit; ++r) {
          const Arc u = a.side(s), v = b.side(r);
          const ArcIntersection x = arcs_intersect(u, v);
          if (x.kind == ArcIntersection::Kind::kPoint &&
              !near_endpoint(x.first, u, kClusterTol) &&
              !near_endpoint(x.first, v, kClusterTol)) {
            note(i, j, fmt::format("sides {}.{} and {}.{} cross", i, s, j, r));
            hit = true;
          }
        }
      }
      for (int k = 0; k < 2 && !hit; ++k) {
        const int from = k == 0 ? i : j, into = k == 0 ? j : i;
        for (const UnitVec& p : probe[from]) {
          if (internal::locate_in_polygon(p, t.tiles[into].vertices) ==
              Location::kInside) {
            note(i, j, fmt::format("interior point of tile {} lies in tile {}",
                                   from, into));
            hit = true;
            break;
          }
        }
      }
    }
  }
  std::vector<OverlapPair> out;
  for (auto& [k, why] : found) out.push_back({k.first, k.second, why});
  return out;
}

std::vector<VertexRecord> find_vertices(const Tiling& t, double tol) {
  std::vector<UnitVec> points;
  for (const PlacedTile& tile : t.tiles) {
    for (const UnitVec& v : tile.vertices) {
      if (std::none_of(points.begin(), points.end(), [&](const UnitVec& p) {
            return angular_distance(p, v) < tol;
          })) {
        points.push_back(v);
      }
    }
  }
  std::vector<VertexRecord> out;
  for (const UnitVec& p : points) {
    VertexRecord rec;
    rec.location = p;
    std::set<int> tiles;
    for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
      const PlacedTile& tile = t.tiles[i];
      bool corner = false;
      for (int c = 0; c < tile.n(); ++c) {
        if (angular_distance(tile.vertex(c), p) < tol) {
          const double a = measured_angle(tile, c);
          rec.corners.push_back({i, c, a});
          rec.angle_sum += a;
          corner = true;
        }
      }
      if (corner) {
        tiles.insert(i);
        continue;
      }
      for (int s = 0; s < tile.n(); ++s) {
        const Arc side = tile.side(s);
        if (distance_to_arc(p, side) < tol && !near_endpoint(p, side, tol)) {
          rec.crossing.push_back({i, s});
          tiles.insert(i);
        }
      }
    }
    if (tiles.size() < 3) continue;
    const bool full = rec.crossing.empty() &&
                      std::abs(rec.angle_sum - 2 * pi) < tol;
    const bool half = rec.crossing.size() == 1 &&
                      std::abs(rec.angle_sum - pi) < tol;
    rec.cls = full ? VertexClass::kFull
              : half ? VertexClass::kHalf
                     : VertexClass::kMalformed;
    out.push_back(std::move(rec));
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

MaximalPatch tag_patch(const Tiling& t, std::vector<int> ids, double side) {
  MaximalPatch m;
  m.tiles = std::move(ids);
  m.side = side;
  if (m.tiles.size() == 1) {
    m.shape = PatchShape::kSingleton;
    return m;
  }
  std::vector<PlacedTile> tiles;
  double area = 0;
  for (int id : m.tiles) {
    tiles.push_back(t.tiles[id]);
    area += t.tiles[id].spec.area;
  }
  const std::vector<BoundaryLoop> loops = patch_boundary(tiles);
  if (loops.size() != 1) return m;
  const BoundaryLoop& b = loops.front();
  if (b.corners.empty() && std::abs(area - 2 * pi) < 1e-8) {
    m.shape = PatchShape::kHemisphere;
  } else if (b.corners.size() == 2 &&
             b.corners[0].dot(b.corners[1]) < -1 + 1e-12 &&
             std::abs(b.angles[0] - b.angles[1]) < kClusterTol) {
    m.shape = PatchShape::kBigon;
    m.apex_angle = b.angles[0];
    for (BigonType type : {BigonType::kI, BigonType::kII, BigonType::kIII,
                           BigonType::kIV, BigonType::kV}) {
      if (std::abs(bigon_apex_angle(type) - m.apex_angle) < kClusterTol) {
        m.bigon_type = type;
      }
    }
  }
  return m;
}

}  // namespace

VerifyOptions VerifyOptions::parse(std::string_view text) {
  VerifyOptions o;
  std::vector<std::string> parts;
  boost::split(parts, std::string(text), boost::is_any_of(","));
  if (parts.size() > 2) {
    throw std::invalid_argument(fmt::format(
        "tolerance: expected 'area' or 'area,cluster', got '{}'", text));
  }
  o.area_tol = parse_positive(parts[0]);
  if (parts.size() == 2) o.cluster_tol = parse_positive(parts[1]);
  return o;
}

VerifyOptions VerifyOptions::from_env() {
  const char* env = std::getenv("SPHTILE_TOL");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::kFull:
      return "full";
    case VertexClass::kHalf:
      return "half";
    case VertexClass::kMalformed:
      return "malformed";
  }
  return "?";
}

std::string to_string(EdgeMatch m) {
  return m == EdgeMatch::kFullFull ? "full-full" : "partial";
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::kEdgeToEdge:
      return "edge-to-edge";
    case Classification::kNonEdgeToEdge:
      return "non-edge-to-edge";
    case Classification::kInvalid:
      return "invalid";
  }
  return "?";
}

std::string to_string(PatchShape s) {
  switch (s) {
    case PatchShape::kSingleton:
      return "singleton";
    case PatchShape::kBigon:
      return "bigon";
    case PatchShape::kHemisphere:
      return "hemisphere";
    case PatchShape::kOther:
      return "other";
  }
  return "?";
}

std::vector<int> corner_sides(const VertexRecord& v, const Tiling& t) {
  std::vector<int> out;
  for (const CornerIncidence& c : v.corners) out.push_back(t.tiles[c.tile].n());
  std::sort(out.begin(), out.end());
  return out;
}

std::string MaximalPatch::tag() const {
  if (shape == PatchShape::kBigon) {
    return bigon_type ? fmt::format("bigon({})", to_string(*bigon_type))
                      : fmt::format("bigon({:.6f})", apex_angle);
  }
  return to_string(shape);
}

int VerificationReport::count(VertexClass c) const {
  return static_cast<int>(std::count_if(
      vertices.begin(), vertices.end(),
      [&](const VertexRecord& v) { return v.cls == c; }));
}

int VerificationReport::count(EdgeMatch m) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(),
                    [&](const EdgeRecord& e) { return e.match == m; }));
}

std::vector<double> side_lengths(const Tiling& t) {
  std::vector<double> all;
  for (const PlacedTile& tile : t.tiles) all.push_back(tile.spec.side);
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double s : all) {
    if (out.empty() || s - out.back() > kSideTol) out.push_back(s);
  }
  return out;
}

std::vector<MaximalPatch> extract_maximal_patches(const Tiling& t,
                                                  double side_length) {
  const int n = static_cast<int>(t.tiles.size());
  auto member = [&](int i) {
    return std::abs(t.tiles[i].spec.side - side_length) < kSideTol;
  };
  UnionFind uf(n);
  for (const SharedEdge& e : side_contacts(t.tiles).edges) {
    if (e.full && member(e.left.tile) && member(e.right.tile)) {
      uf.join(e.left.tile, e.right.tile);
    }
  }
  std::map<int, std::vector<int>> groups;
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    if (!member(i)) continue;
    const int root = uf.find(i);
    if (!groups.count(root)) order.push_back(root);
    groups[root].push_back(i);
  }
  std::vector<MaximalPatch> out;
  for (int root : order) out.push_back(tag_patch(t, groups[root], side_length));
  return out;
}

VerificationReport full_report(const Tiling& t, const VerifyOptions& options) {
  if (t.tiles.empty()) {
    throw std::invalid_argument("full_report: tiling has no tiles");
  }
  VerificationReport r;
  double area = 0;
  for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
    const PlacedTile& tile = t.tiles[i];
    try {
      area += polygon_area(tile.vertices);
      r.max_tile_drift = std::max(r.max_tile_drift, tile_drift(tile));
    } catch (const std::invalid_argument& e) {
      r.diagnostics.push_back(fmt::format("tile {}: {}", i, e.what()));
    }
  }
  if (!r.diagnostics.empty()) {
    r.area_residual = std::nan("");
    r.classification = Classification::kInvalid;
    return r;
  }
  r.area_residual = area - 4 * pi;
  if (std::abs(r.area_residual) > options.area_tol) {
    r.diagnostics.push_back(
        fmt::format("area residual {:.3e} exceeds {:.1e}", r.area_residual,
                    options.area_tol));
  }

  const SideContacts contacts = side_contacts(t.tiles);
  r.overlap_pairs = find_overlaps(t, contacts);
  for (const OverlapPair& p : r.overlap_pairs) {
    r.diagnostics.push_back(
        fmt::format("tiles {} and {} overlap: {}", p.a, p.b, p.reason));
  }
  for (const SharedEdge& e : contacts.edges) {
    r.edges.push_back({e.a, e.b, e.left, e.right,
                       e.full ? EdgeMatch::kFullFull : EdgeMatch::kPartial});
  }
  r.unmatched_boundary_loops = static_cast<int>(patch_boundary(t.tiles).size());
  if (r.unmatched_boundary_loops > 0) {
    r.diagnostics.push_back(fmt::format("{} unmatched boundary loop(s)",
                                        r.unmatched_boundary_loops));
  }
  r.vertices = find_vertices(t, options.cluster_tol);
  for (const VertexRecord& v : r.vertices) {
    if (v.cls == VertexClass::kMalformed) {
      r.diagnostics.push_back(fmt::format(
          "vertex at ({:.6f}, {:.6f}, {:.6f}): {} corners summing to {:.9f}, "
          "{} crossing sides",
          v.location.x(), v.location.y(), v.location.z(), v.corners.size(),
          v.angle_sum, v.crossing.size()));
    }
  }

  if (!r.diagnostics.empty()) {
    r.classification = Classification::kInvalid;
  } else if (r.count(VertexClass::kHalf) > 0 ||
             r.count(EdgeMatch::kPartial) > 0) {
    r.classification = Classification::kNonEdgeToEdge;
  } else {
    r.classification = Classification::kEdgeToEdge;
  }
  if (r.valid()) {
    for (double s : side_lengths(t)) {
      const auto patches = extract_maximal_patches(t, s);
      r.maximal_patches.insert(r.maximal_patches.end(), patches.begin(),
                               patches.end());
    }
  }
  return r;
}

namespace {

bool same_spec(const PlacedTile& a, const PlacedTile& b, double tol) {
  return a.n() == b.n() && std::abs(a.spec.angle - b.spec.angle) < tol;
}

bool same_tile(const PlacedTile& a, const PlacedTile& b, double tol) {
  if (!same_spec(a, b, tol)) return false;
  for (const UnitVec& v : a.vertices) {
    if (std::none_of(b.vertices.begin(), b.vertices.end(),
                     [&](const UnitVec& w) {
                       return angular_distance(v, w) < tol;
                     })) {
      return false;
    }
  }
  return true;
}

bool maps_onto(std::span<const PlacedTile> image, const Tiling& b, double tol) {
  std::vector<bool> used(b.tiles.size(), false);
  for (const PlacedTile& p : image) {
    bool matched = false;
    for (std::size_t j = 0; j < b.tiles.size(); ++j) {
      if (!used[j] && same_tile(p, b.tiles[j], tol)) {
        used[j] = matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

bool equivalent_up_to_isometry(const Tiling& a, const Tiling& b,
                               bool allow_reflection, double tol) {
  if (a.tiles.size() != b.tiles.size()) return false;
  if (a.tiles.empty()) return true;
  // Anchor on the tile kind with the fewest copies.
  std::size_t anchor = 0;
  std::size_t best = a.tiles.size() + 1;
  for (std::size_t i = 0; i < a.tiles.size(); ++i) {
    const auto copies = std::count_if(
        a.tiles.begin(), a.tiles.end(),
        [&](const PlacedTile& t) { return same_spec(t, a.tiles[i], tol); });
    const auto in_b = std::count_if(
        b.tiles.begin(), b.tiles.end(),
        [&](const PlacedTile& t) { return same_spec(t, a.tiles[i], tol); });
    if (copies != in_b) return false;
    if (static_cast<std::size_t>(copies) < best) {
      best = copies;
      anchor = i;
    }
  }
  std::vector<Isometry> pre{Isometry::identity()};
  if (allow_reflection) pre.push_back(Isometry::reflection(UnitVec(0, 0, 1)));
  for (const Isometry& f : pre) {
    const std::vector<PlacedTile> src = transformed(a.tiles, f);
    const PlacedTile& s = src[anchor];
    for (const PlacedTile& target : b.tiles) {
      if (!same_spec(s, target, tol)) continue;
      for (int k = 0; k < target.n(); ++k) {
        if (std::abs(angular_distance(s.vertex(0), s.vertex(1)) -
                     angular_distance(target.vertex(k), target.vertex(k + 1))) >
            tol) {
          continue;
        }
        const Isometry g = Isometry::aligning(s.vertex(0), s.vertex(1),
                                              target.vertex(k),
                                              target.vertex(k + 1));
        if (maps_onto(transformed(src, g), b, tol)) return true;
      }
    }
  }
  return false;
}

}  // namespace sphtile
