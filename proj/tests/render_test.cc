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

#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "sphtile/catalog.h"

namespace sphtile {
namespace {

using std::numbers::pi;

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(RenderTest, OneGroupPerTile) {
  const Tiling t = generate("lunar:II-triangle");
  const std::string svg = render_svg(t);
  EXPECT_EQ(count(svg, "<g id=\"tile-"), static_cast<int>(t.tiles.size()));
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(RenderTest, Deterministic) {
  const Tiling t = generate("kaleidoscope:pent-tri", {{"angle", 1.9}});
  RenderOptions o;
  o.projection = Projection::kStereo;
  EXPECT_EQ(render_svg(t, o), render_svg(t, o));
  EXPECT_EQ(render_svg(t), render_svg(t));
}

TEST(RenderTest, OrthoDashesTheFarSide) {
  const std::string svg = render_svg(generate("reference:octahedron"));
  EXPECT_GT(count(svg, "stroke-dasharray"), 0);
  RenderOptions o;
  o.projection = Projection::kStereo;
  EXPECT_EQ(count(render_svg(generate("reference:octahedron"), o), "stroke-dasharray"), 0);
}

TEST(RenderTest, StereoFromTheBigTileShowsEverySmallTile) {
  const Tiling t = magic_triangle_tiling();
  UnitVec c;
  int big = -1;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    if (t.tiles[i].spec.is_reflex()) {
      c = t.tiles[i].center();
      big = static_cast<int>(i);
    }
  }
  ASSERT_GE(big, 0);
  RenderOptions o;
  o.projection = Projection::kStereo;
  o.view_lat = -std::asin(c.z()) * 180 / pi;
  o.view_lon = std::atan2(-c.y(), -c.x()) * 180 / pi;
  const std::string svg = render_svg(t, o);
  EXPECT_EQ(count(svg, "fill-opacity"), static_cast<int>(t.tiles.size()) - 1);

  // Every drawn point stays on the canvas.
  const std::regex num(R"((-?\d+\.\d\d),(-?\d+\.\d\d))");
  int points = 0;
  for (std::sregex_iterator it(svg.begin(), svg.end(), num), end; it != end; ++it) {
    const double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
    EXPECT_GE(x, 0);
    EXPECT_LE(x, o.size);
    EXPECT_GE(y, 0);
    EXPECT_LE(y, o.size);
    ++points;
  }
  EXPECT_GT(points, 100);
}

TEST(RenderTest, RejectsBadOptions) {
  EXPECT_THROW(parse_projection("mercator"), std::invalid_argument);
  EXPECT_EQ(parse_projection("stereo"), Projection::kStereo);
  const Tiling t = generate("reference:octahedron");
  RenderOptions o;
  o.size = 0;
  EXPECT_THROW(render_svg(t, o), std::invalid_argument);
  o = {};
  o.view_lat = 95;
  EXPECT_THROW(render_svg(t, o), std::invalid_argument);
}

TEST(RenderTest, BoundarySteps) {
  const Tiling t = generate("lunar:II-pentagon");
  for (const PlacedTile& tile : t.tiles) {
    const auto pts = sampled_boundary(tile);
    ASSERT_GE(pts.size(), static_cast<std::size_t>(tile.n()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_LE(angular_distance(pts[i], pts[(i + 1) % pts.size()]), 0.5 * pi / 180 + 1e-12);
    }
  }
}

TEST(ObjTest, OctahedronObjects) {
  const std::string obj = export_obj(generate("reference:octahedron"));
  std::istringstream in(obj);
  std::string line;
  int objects = 0, verts = 0;
  while (std::getline(in, line)) {
    if (line.rfind("o ", 0) == 0) ++objects;
    if (line.rfind("v ", 0) == 0) {
      std::istringstream v(line.substr(2));
      double x, y, z;
      v >> x >> y >> z;
      EXPECT_NEAR(std::sqrt(x * x + y * y + z * z), 1, 2e-9);
      ++verts;
    }
  }
  EXPECT_EQ(objects, 8);
  // A quarter great circle takes 180 half-degree steps, 181 when the
  // length rounds up past the exact quotient.
  EXPECT_GE(verts, 8 * 3 * 180);
  EXPECT_LE(verts, 8 * 3 * 181);
}

}  // namespace
}  // namespace sphtile
