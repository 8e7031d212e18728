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

#include "sphtile/tiling_file.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

namespace sphtile {

using nlohmann::json;

double round15(double v) {
  if (!std::isfinite(v)) return v;
  const double r = std::stod(fmt::format("{:.15g}", v));
  return r == 0 ? 0.0 : r;  // no negative zero
}

namespace {

json point(const UnitVec& p) {
  return json::array({round15(p.x()), round15(p.y()), round15(p.z())});
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw std::invalid_argument(fmt::format("missing field '{}'", key));
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(fmt::format("field '{}': {}", key, e.what()));
  }
}

RegularPolygonSpec spec_for(int n, double angle) {
  if (angle > std::numbers::pi + 1e-12) {
    return RegularPolygonSpec::from_angle(n, 2 * std::numbers::pi - angle)
        .complement();
  }
  return RegularPolygonSpec::from_angle(n, angle);
}

}  // namespace

json tiling_to_json(const Tiling& t) {
  json tiles = json::array();
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const PlacedTile& tile = t.tiles[i];
    json verts = json::array();
    for (const UnitVec& v : tile.vertices) verts.push_back(point(v));
    tiles.push_back({{"id", i},
                     {"n", tile.n()},
                     {"angle", round15(tile.spec.angle)},
                     {"vertices", verts}});
  }
  json params = json::object();
  for (const auto& [k, v] : t.parameters) params[k] = round15(v);
  return {{"format", kFormatTag},
          {"family", t.family.to_string()},
          {"parameters", params},
          {"provenance", t.provenance},
          {"metadata",
           {{"generator", kGeneratorVersion}, {"canonical_pose", true}}},
          {"tiles", tiles}};
}

Tiling tiling_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("tiling file is not an object");
  const std::string tag = field<std::string>(j, "format");
  if (tag != kFormatTag) {
    throw std::invalid_argument(
        fmt::format("format '{}' is not {}", tag, kFormatTag));
  }
  Tiling t;
  t.family = FamilyId::parse(field<std::string>(j, "family"));
  if (j.contains("parameters")) {
    t.parameters = field<std::map<std::string, double>>(j, "parameters");
  }
  if (j.contains("provenance")) {
    t.provenance = field<std::vector<std::string>>(j, "provenance");
  }
  for (const json& jt : field<json>(j, "tiles")) {
    const int n = field<int>(jt, "n");
    const auto coords = field<std::vector<std::vector<double>>>(jt, "vertices");
    if (static_cast<int>(coords.size()) != n) {
      throw std::invalid_argument(fmt::format(
          "tile {} has {} vertices, n = {}", t.tiles.size(), coords.size(), n));
    }
    PlacedTile tile{spec_for(n, field<double>(jt, "angle")), {}};
    for (const auto& c : coords) {
      if (c.size() != 3) throw std::invalid_argument("vertex is not [x, y, z]");
      const Vec3 v(c[0], c[1], c[2]);
      if (std::abs(v.norm() - 1) > 1e-12) {
        throw std::invalid_argument(fmt::format(
            "tile {}: vertex off the unit sphere by {:.3e}", t.tiles.size(),
            std::abs(v.norm() - 1)));
      }
      tile.vertices.push_back(UnitVec::as_is(v));
    }
    t.tiles.push_back(std::move(tile));
  }
  return t;
}

json report_to_json(const VerificationReport& r, const Tiling& t) {
  json vertices = json::array();
  for (const VertexRecord& v : r.vertices) {
    json corners = json::array();
    for (const CornerIncidence& c : v.corners) {
      corners.push_back(
          {{"tile", c.tile}, {"corner", c.corner}, {"angle", round15(c.angle)}});
    }
    json crossing = json::array();
    for (const SideRef& s : v.crossing) {
      crossing.push_back({{"tile", s.tile}, {"side", s.side}});
    }
    vertices.push_back({{"location", point(v.location)},
                        {"class", to_string(v.cls)},
                        {"angle_sum", round15(v.angle_sum)},
                        {"corners", corners},
                        {"crossing", crossing}});
  }
  json edges = json::array();
  for (const EdgeRecord& e : r.edges) {
    edges.push_back({{"from", point(e.a)},
                     {"to", point(e.b)},
                     {"left", {e.left.tile, e.left.side}},
                     {"right", {e.right.tile, e.right.side}},
                     {"match", to_string(e.match)}});
  }
  json overlaps = json::array();
  for (const OverlapPair& p : r.overlap_pairs) {
    overlaps.push_back({{"tiles", {p.a, p.b}}, {"reason", p.reason}});
  }
  json patches = json::array();
  for (const MaximalPatch& p : r.maximal_patches) {
    patches.push_back(
        {{"tiles", p.tiles}, {"side", round15(p.side)}, {"shape", p.tag()}});
  }
  return {
      {"format", "sphtile-report/1"},
      {"family", t.family.to_string()},
      {"classification", to_string(r.classification)},
      {"area_residual",
       std::isfinite(r.area_residual) ? json(round15(r.area_residual))
                                      : json(nullptr)},
      {"max_tile_drift", round15(r.max_tile_drift)},
      {"unmatched_boundary_loops", r.unmatched_boundary_loops},
      {"counts",
       {{"tiles", t.tiles.size()},
        {"full_vertices", r.count(VertexClass::kFull)},
        {"half_vertices", r.count(VertexClass::kHalf)},
        {"malformed_vertices", r.count(VertexClass::kMalformed)},
        {"full_edges", r.count(EdgeMatch::kFullFull)},
        {"partial_edges", r.count(EdgeMatch::kPartial)},
        {"overlap_pairs", r.overlap_pairs.size()}}},
      {"species", species_counts(t)},
      {"overlaps", overlaps},
      {"vertices", vertices},
      {"edges", edges},
      {"maximal_patches", patches},
      {"diagnostics", r.diagnostics},
  };
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path));
  out << text;
  if (!out) throw std::runtime_error(fmt::format("error writing {}", path));
}

void save_tiling(const Tiling& t, const std::string& path) {
  write_text(path, dump(tiling_to_json(t)));
}

Tiling load_tiling(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot read {}", path));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(fmt::format("{}: {}", path, e.what()));
  }
  return tiling_from_json(j);
}

}  // namespace sphtile
