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
#include <filesystem>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "sphtile/catalog.h"
#include "sphtile/verify.h"

namespace sphtile {
namespace {

using nlohmann::json;
using std::numbers::pi;

TEST(Round15Test, FifteenSignificantDigits) {
  EXPECT_EQ(round15(0.1 + 0.2), 0.3);
  EXPECT_EQ(round15(pi), 3.14159265358979);
  const double z = round15(-0.0);
  EXPECT_EQ(z, 0.0);
  EXPECT_FALSE(std::signbit(z));
  EXPECT_EQ(round15(-1e-300), -1e-300);
}

TEST(TilingFileTest, RoundTripKeepsEveryNumber) {
  for (const ManifestEntry& e : family_manifest()) {
    const Tiling t = generate(e.family);
    const json j = tiling_to_json(t);
    const Tiling back = tiling_from_json(json::parse(dump(j)));
    ASSERT_EQ(back.tiles.size(), t.tiles.size()) << e.family;
    EXPECT_EQ(back.family, t.family);
    EXPECT_EQ(back.provenance, t.provenance);
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
      EXPECT_EQ(back.tiles[i].n(), t.tiles[i].n());
      EXPECT_EQ(back.tiles[i].spec.angle, round15(t.tiles[i].spec.angle));
      for (int k = 0; k < t.tiles[i].n(); ++k) {
        EXPECT_NEAR(angular_distance(back.tiles[i].vertex(k), t.tiles[i].vertex(k)), 0,
                    1e-14);
      }
    }
    // A second pass is a fixed point.
    EXPECT_EQ(dump(tiling_to_json(back)), dump(j)) << e.family;
  }
}

TEST(TilingFileTest, RoundTripKeepsClassification) {
  for (const char* family : {"reference:octahedron", "lunar:II-triangle",
                             "magic-triangle", "two-hemisphere:monogon7+monogon5"}) {
    const Tiling t = generate(family);
    const Tiling back = tiling_from_json(tiling_to_json(t));
    EXPECT_EQ(full_report(back).classification, full_report(t).classification)
        << family;
  }
}

TEST(TilingFileTest, Layout) {
  const json j = tiling_to_json(generate("reference:octahedron"));
  EXPECT_EQ(j["format"], "sphtile/1");
  EXPECT_EQ(j["family"], "reference:octahedron");
  EXPECT_EQ(j["metadata"]["generator"], kGeneratorVersion);
  EXPECT_EQ(j["metadata"]["canonical_pose"], true);
  ASSERT_EQ(j["tiles"].size(), 8u);
  EXPECT_EQ(j["tiles"][3]["id"], 3);
  EXPECT_EQ(j["tiles"][3]["n"], 3);
  EXPECT_EQ(j["tiles"][3]["vertices"].size(), 3u);
  // Keys come out sorted.
  const std::string text = dump(j);
  EXPECT_LT(text.find("\"family\""), text.find("\"format\""));
  EXPECT_LT(text.find("\"format\""), text.find("\"metadata\""));
  EXPECT_LT(text.find("\"parameters\""), text.find("\"provenance\""));
  EXPECT_EQ(text.back(), '\n');
}

TEST(TilingFileTest, RejectsBadFiles) {
  const json good = tiling_to_json(generate("reference:octahedron"));
  json j = good;
  j["format"] = "sphtile/0";
  EXPECT_THROW(tiling_from_json(j), std::invalid_argument);
  j = good;
  j.erase("tiles");
  EXPECT_THROW(tiling_from_json(j), std::invalid_argument);
  j = good;
  j["tiles"][0]["vertices"][0] = {1.0, 0.001, 0.0};
  EXPECT_THROW(tiling_from_json(j), std::invalid_argument);
  j = good;
  j["tiles"][0]["n"] = 4;
  EXPECT_THROW(tiling_from_json(j), std::invalid_argument);
  j = good;
  j["tiles"][0]["vertices"][0] = {1.0, 0.0};
  EXPECT_THROW(tiling_from_json(j), std::invalid_argument);
  j = good;
  j["family"] = 7;
  EXPECT_THROW(tiling_from_json(j), std::invalid_argument);
  EXPECT_THROW(tiling_from_json(json::array()), std::invalid_argument);
}

TEST(TilingFileTest, ReflexTileSurvives) {
  const Tiling t = magic_triangle_tiling();
  const Tiling back = tiling_from_json(tiling_to_json(t));
  int reflex = 0;
  for (const PlacedTile& tile : back.tiles) reflex += tile.spec.is_reflex();
  EXPECT_EQ(reflex, 1);
}

TEST(TilingFileTest, SaveAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "sphtile_file_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "l.json").string();
  const Tiling t = generate("lunar:IV-square");
  save_tiling(t, path);
  const Tiling back = load_tiling(path);
  EXPECT_EQ(back.tiles.size(), t.tiles.size());
  EXPECT_THROW(load_tiling((dir / "missing.json").string()), std::runtime_error);
  write_text((dir / "junk.json").string(), "{not json");
  EXPECT_THROW(load_tiling((dir / "junk.json").string()), std::invalid_argument);
  std::filesystem::remove_all(dir);
}

TEST(ReportFileTest, CountsAndRecords) {
  const Tiling t = generate("reference:octahedron");
  const json r = report_to_json(full_report(t), t);
  EXPECT_EQ(r["format"], "sphtile-report/1");
  EXPECT_EQ(r["classification"], "edge-to-edge");
  EXPECT_EQ(r["counts"]["full_vertices"], 6);
  EXPECT_EQ(r["counts"]["full_edges"], 12);
  EXPECT_EQ(r["counts"]["tiles"], 8);
  EXPECT_EQ(r["vertices"].size(), 6u);
  EXPECT_EQ(r["vertices"][0]["corners"].size(), 4u);
  EXPECT_EQ(r["species"]["triangle"], 8);
}

TEST(ReportFileTest, MissingAreaIsNull) {
  Tiling t = generate("reference:octahedron");
  VerificationReport r = full_report(t);
  r.area_residual = std::numeric_limits<double>::quiet_NaN();
  EXPECT_TRUE(report_to_json(r, t)["area_residual"].is_null());
}

}  // namespace
}  // namespace sphtile
