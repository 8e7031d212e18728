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

#include "sphtile/render.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <fmt/format.h>

namespace sphtile {

using std::numbers::pi;

Projection parse_projection(std::string_view text) {
  if (text == "ortho") return Projection::kOrtho;
  if (text == "stereo") return Projection::kStereo;
  throw std::invalid_argument(
      fmt::format("projection '{}' is not ortho or stereo", text));
}

std::vector<UnitVec> sampled_boundary(const PlacedTile& tile, double max_step) {
  std::vector<UnitVec> out;
  for (int i = 0; i < tile.n(); ++i) {
    const Arc side = tile.side(i);
    const int steps = std::max(1, static_cast<int>(std::ceil(side.length() / max_step)));
    for (int k = 0; k < steps; ++k) out.push_back(side.point_at(double(k) / steps));
  }
  return out;
}

namespace {

const char* fill_for(const std::string& species) {
  static const std::map<std::string, const char*> kFill = {
      {"triangle", "#f2d27a"},       {"square", "#8fb8de"},
      {"pentagon", "#9ccc9c"},       {"magic-triangle", "#e38b6f"},
      {"complement", "#d9d9d9"},
  };
  const auto it = kFill.find(species);
  return it == kFill.end() ? "#c8c8c8" : it->second;
}

// Rotation taking the view point to +z with north kept up.
Mat3 view_frame(double lat_deg, double lon_deg) {
  const double lat = lat_deg * pi / 180, lon = lon_deg * pi / 180;
  const Vec3 c(std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon),
               std::sin(lat));
  const Vec3 east(-std::sin(lon), std::cos(lon), 0);
  const Vec3 north = c.cross(east);
  Mat3 m;
  m.row(0) = east;
  m.row(1) = north;
  m.row(2) = c;
  return m;
}

struct Canvas {
  double scale;
  double half;
  std::string point(double x, double y) const {
    return fmt::format("{:.2f},{:.2f}", half + scale * x, half - scale * y);
  }
};

// Polyline pieces, split where `keep` changes.
template <typename Keep>
std::vector<std::vector<Vec3>> runs(const std::vector<Vec3>& loop, Keep keep,
                                    bool want) {
  std::vector<std::vector<Vec3>> out;
  std::vector<Vec3> cur;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i <= n; ++i) {
    const Vec3& p = loop[i % n];
    if (keep(p) == want) {
      cur.push_back(p);
    } else if (!cur.empty()) {
      if (cur.size() > 1) out.push_back(cur);
      cur.clear();
    }
  }
  if (cur.size() > 1) out.push_back(cur);
  return out;
}

}  // namespace

std::string render_svg(const Tiling& t, const RenderOptions& o) {
  if (o.size <= 0) throw std::invalid_argument("render: size must be positive");
  if (!(std::abs(o.view_lat) <= 90) || !std::isfinite(o.view_lon)) {
    throw std::invalid_argument(
        fmt::format("render: view ({}, {}) is not a latitude/longitude pair",
                    o.view_lat, o.view_lon));
  }
  const Mat3 frame = view_frame(o.view_lat, o.view_lon);
  const bool stereo = o.projection == Projection::kStereo;
  const double half = o.size / 2.0;
  const Canvas canvas{(half - 10) / (stereo ? o.stereo_extent : 1.0), half};
  const double limit = 1.2 * o.stereo_extent;
  auto project = [&](const Vec3& p) -> std::pair<double, double> {
    if (!stereo) return {p.x(), p.y()};
    return {p.x() / (1 + p.z()), p.y() / (1 + p.z())};
  };
  auto drawable = [&](const Vec3& p) {
    if (!stereo) return p.z() >= 0;
    const auto [x, y] = project(p);
    return 1 + p.z() > 1e-9 && std::hypot(x, y) < limit;
  };
  auto path = [&](const std::vector<Vec3>& pts, bool close) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto [x, y] = project(pts[i]);
      d += (i == 0 ? "M" : " L") + canvas.point(x, y);
    }
    return close ? d + " Z" : d;
  };

  std::string svg = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
      "<title>{1}</title>\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      o.size, t.family.to_string());
  if (!stereo) {
    svg += fmt::format(
        "<circle cx=\"{0:.2f}\" cy=\"{0:.2f}\" r=\"{1:.2f}\" fill=\"#f7f7f7\" "
        "stroke=\"black\" stroke-width=\"1\"/>\n",
        half, canvas.scale);
  }
  const UnitVec pole(Vec3(-frame.row(2).transpose()));
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const PlacedTile& tile = t.tiles[i];
    std::vector<Vec3> loop;
    for (const UnitVec& p : sampled_boundary(tile)) loop.push_back(frame * p.vec());
    const bool all_drawable =
        std::all_of(loop.begin(), loop.end(), drawable);
    const bool holds_pole =
        stereo && internal::locate_in_polygon(pole, tile.vertices) !=
                      Location::kOutside;
    svg += fmt::format("<g id=\"tile-{}\">\n", i);
    if (all_drawable && !holds_pole) {
      svg += fmt::format(
          "<path d=\"{}\" fill=\"{}\" fill-opacity=\"0.85\" stroke=\"none\"/>\n",
          path(loop, true), fill_for(species(tile)));
    }
    for (const auto& run : runs(loop, drawable, true)) {
      svg += fmt::format(
          "<path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n",
          path(run, false));
    }
    if (!stereo) {
      for (const auto& run : runs(loop, drawable, false)) {
        svg += fmt::format(
            "<path d=\"{}\" fill=\"none\" stroke=\"#999999\" "
            "stroke-width=\"0.6\" stroke-dasharray=\"3,3\"/>\n",
            path(run, false));
      }
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string export_obj(const Tiling& t) {
  std::string out = fmt::format("# {} {}\n# {} tiles, sides sampled every 0.5 degrees\n",
                                "sphtile", t.family.to_string(), t.tiles.size());
  int base = 1;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const std::vector<UnitVec> pts = sampled_boundary(t.tiles[i]);
    out += fmt::format("o tile_{}_{}\n", i, species(t.tiles[i]));
    for (const UnitVec& p : pts) {
      out += fmt::format("v {:.9f} {:.9f} {:.9f}\n", p.x(), p.y(), p.z());
    }
    out += "l";
    for (std::size_t k = 0; k < pts.size(); ++k) out += fmt::format(" {}", base + k);
    out += fmt::format(" {}\n", base);
    base += static_cast<int>(pts.size());
  }
  return out;
}

}  // namespace sphtile
