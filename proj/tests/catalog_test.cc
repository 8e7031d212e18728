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
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "sphtile/verify.h"

namespace sphtile {
namespace {

using std::numbers::pi;
using Species = std::map<std::string, int>;

constexpr double kDeg = pi / 180;

double girard_sum(const Tiling& t) {
  double sum = 0;
  for (const PlacedTile& tile : t.tiles) sum += polygon_area(tile.vertices);
  return sum;
}

int count_with_angle(const Tiling& t, int n, double angle) {
  return static_cast<int>(std::count_if(
      t.tiles.begin(), t.tiles.end(), [&](const PlacedTile& p) {
        return p.n() == n && std::abs(p.spec.angle - angle) < 1e-9;
      }));
}

double nearest(const UnitVec& p, const Tiling& t) {
  double best = pi;
  for (const PlacedTile& tile : t.tiles) {
    for (const UnitVec& v : tile.vertices) best = std::min(best, angular_distance(p, v));
  }
  return best;
}

// --- kaleidoscopes ---------------------------------------------------------

TEST(KaleidoscopeTest, TriTriAtSeventyDegrees) {
  const Tiling t = kaleidoscope(KaleidoscopeVariant::kTriTri, 70 * kDeg);
  EXPECT_EQ(t.tiles.size(), 8u);
  EXPECT_EQ(count_with_angle(t, 3, 70 * kDeg), 4);
  EXPECT_EQ(count_with_angle(t, 3, 110 * kDeg), 4);
  EXPECT_NEAR(girard_sum(t), 4 * pi, 1e-12);
  EXPECT_NEAR(t.parameters.at("angle"), 70 * kDeg, 1e-15);
}

TEST(KaleidoscopeTest, SquareTriAtHundredDegrees) {
  const Tiling t = kaleidoscope(KaleidoscopeVariant::kSquareTri, 100 * kDeg);
  EXPECT_EQ(species_counts(t), (Species{{"square", 6}, {"triangle", 8}}));
  EXPECT_EQ(count_with_angle(t, 4, 100 * kDeg), 6);
  EXPECT_EQ(count_with_angle(t, 3, 80 * kDeg), 8);
  EXPECT_NEAR(girard_sum(t), 4 * pi, 1e-12);
}

TEST(KaleidoscopeTest, TriPentRange) {
  EXPECT_THROW(kaleidoscope(KaleidoscopeVariant::kTriPent, 60 * kDeg),
               std::domain_error);
  const Tiling t = kaleidoscope(KaleidoscopeVariant::kTriPent, 62 * kDeg);
  EXPECT_EQ(species_counts(t), (Species{{"pentagon", 12}, {"triangle", 20}}));
}

TEST(KaleidoscopeTest, EndpointErrorsNameTheLimit) {
  const KaleidoscopeRange r = kaleidoscope_range(KaleidoscopeVariant::kPentTri);
  try {
    kaleidoscope(KaleidoscopeVariant::kPentTri, r.lo);
    FAIL() << "lower endpoint accepted";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("icosahedron"), std::string::npos);
  }
  EXPECT_THROW(kaleidoscope(KaleidoscopeVariant::kPentTri, r.hi + 1e-6),
               std::domain_error);
  EXPECT_NO_THROW(kaleidoscope(KaleidoscopeVariant::kPentTri, r.hi));
}

TEST(KaleidoscopeTest, ParameterIntervals) {
  const auto tt = kaleidoscope_range(KaleidoscopeVariant::kTriTri);
  EXPECT_NEAR(tt.lo, pi / 3, 0);
  EXPECT_NEAR(tt.hi, pi / 2, 0);
  const auto st = kaleidoscope_range(KaleidoscopeVariant::kSquareTri);
  const auto ts = kaleidoscope_range(KaleidoscopeVariant::kTriSquare);
  EXPECT_NEAR(st.hi, std::acos(-1.0 / 3), 1e-15);
  EXPECT_NEAR(ts.hi, std::acos(1.0 / 3), 1e-15);
  const auto pt = kaleidoscope_range(KaleidoscopeVariant::kPentTri);
  const auto tp = kaleidoscope_range(KaleidoscopeVariant::kTriPent);
  EXPECT_NEAR(pt.hi, pi - std::atan(2.0), 1e-15);
  EXPECT_NEAR(tp.hi, std::atan(2.0), 1e-15);
}

class KaleidoscopeContinuity
    : public ::testing::TestWithParam<KaleidoscopeVariant> {};

TEST_P(KaleidoscopeContinuity, UpperEndIsTheNamedSolid) {
  const KaleidoscopeVariant v = GetParam();
  const KaleidoscopeRange r = kaleidoscope_range(v);
  const Tiling limit = kaleidoscope(v, r.hi);
  EXPECT_TRUE(equivalent_up_to_isometry(limit, edge_to_edge_reference(r.hi_limit)))
      << r.hi_limit;
  const Tiling near = kaleidoscope(v, r.hi - 1e-3);
  double worst = 0;
  for (const PlacedTile& tile : near.tiles) {
    if (std::abs(tile.spec.angle - (r.hi - 1e-3)) > 1e-12) continue;
    for (const UnitVec& p : tile.vertices) worst = std::max(worst, nearest(p, limit));
  }
  EXPECT_LT(worst, 1e-2);
}

TEST_P(KaleidoscopeContinuity, SmallTilesVanishAtTheLowerEnd) {
  const KaleidoscopeVariant v = GetParam();
  const KaleidoscopeRange r = kaleidoscope_range(v);
  auto small_area = [&](double eps) {
    const Tiling t = kaleidoscope(v, r.lo + eps);
    double sum = 0;
    for (const PlacedTile& tile : t.tiles) {
      if (std::abs(tile.spec.angle - (r.lo + eps)) < 1e-12) {
        sum += polygon_area(tile.vertices);
      }
    }
    return sum;
  };
  const double a3 = small_area(1e-3), a2 = small_area(1e-2);
  EXPECT_GT(a3, 0);
  EXPECT_NEAR(a3 / a2, 0.1, 1e-6);
  EXPECT_LT(a3, 0.1);
}

INSTANTIATE_TEST_SUITE_P(
    AllVariants, KaleidoscopeContinuity,
    ::testing::Values(KaleidoscopeVariant::kTriTri, KaleidoscopeVariant::kSquareTri,
                      KaleidoscopeVariant::kTriSquare, KaleidoscopeVariant::kPentTri,
                      KaleidoscopeVariant::kTriPent),
    [](const auto& info) {
      std::string s = to_string(info.param);
      std::erase(s, '-');
      return s;
    });

TEST(KaleidoscopeTest, PassThroughSolids) {
  EXPECT_TRUE(equivalent_up_to_isometry(
      kaleidoscope(KaleidoscopeVariant::kSquareTri, std::acos(-1.0 / 3)),
      edge_to_edge_reference("cuboctahedron")));
  EXPECT_TRUE(equivalent_up_to_isometry(
      kaleidoscope(KaleidoscopeVariant::kPentTri, pi - std::atan(2.0)),
      edge_to_edge_reference("icosidodecahedron")));
}

// --- two-hemisphere --------------------------------------------------------

TEST(TwoHemisphereTest, OctahedronPair) {
  const HemisphereKind octa = HemisphereKind::parse("octa");
  const Tiling twisted = two_hemisphere(octa, octa, pi / 4);
  EXPECT_EQ(twisted.tiles.size(), 8u);
  EXPECT_EQ(full_report(twisted).classification, Classification::kNonEdgeToEdge);
  const Tiling aligned = two_hemisphere(octa, octa, 0);
  EXPECT_EQ(full_report(aligned).classification, Classification::kEdgeToEdge);
  EXPECT_TRUE(equivalent_up_to_isometry(aligned, edge_to_edge_reference("octahedron")));
}

TEST(TwoHemisphereTest, ContainsTheOneTriangleComposition) {
  const HemisphereKind composed_half = HemisphereKind::parse("icosidodeca-composed");
  const HemisphereKind plain = HemisphereKind::parse("icosidodeca");
  const Tiling one = composed("icosidodeca-1");
  for (int k = 1; k < 10; k += 2) {
    EXPECT_TRUE(equivalent_up_to_isometry(
        two_hemisphere(composed_half, plain, k * pi / 5), one))
        << k;
  }
}

TEST(TwoHemisphereTest, ComposedPairsMeetTheComposedFamily) {
  const HemisphereKind h = HemisphereKind::parse("icosidodeca-composed");
  const std::pair<int, Tiling> cases[] = {
      {1, composed("icosidodeca-2-side")},   {3, composed("icosidodeca-2-side")},
      {5, composed("icosidodeca-2-vertex")}, {9, composed("icosidodeca-2-vertex")},
      {7, lunar(BigonType::kIV, 3)},
  };
  for (const auto& [k, expected] : cases) {
    EXPECT_TRUE(equivalent_up_to_isometry(two_hemisphere(h, h, k * pi / 5), expected))
        << k;
  }
}

// --- lunar and sporadic ----------------------------------------------------

TEST(LunarTest, PolarTiles) {
  const Tiling ii5 = lunar(BigonType::kII, 5);
  EXPECT_EQ(ii5.tiles.size(), 17u);
  EXPECT_EQ(count_with_angle(ii5, 5, pi - std::acos(1.0 / 3)), 2);
  int polar = 0;
  for (const PlacedTile& t : ii5.tiles) {
    polar += t.n() == 5 && std::abs(t.spec.angle - 109.471 * kDeg) < 1e-3 * kDeg;
  }
  EXPECT_EQ(polar, 2);
  const Tiling iv4 = lunar(BigonType::kIV, 4);
  int squares = 0;
  for (const PlacedTile& t : iv4.tiles) {
    if (t.n() != 4) continue;
    ++squares;
    EXPECT_NEAR(t.spec.side / pi, 0.3752, 5e-4);
  }
  EXPECT_EQ(squares, 2);
  EXPECT_EQ(iv4.tiles.size(), 4u * 6 + 2);
  const Tiling iv3 = lunar(BigonType::kIV, 3);
  EXPECT_EQ(species_counts(iv3)["magic-triangle"], 2);
  EXPECT_EQ(iv3.tiles.size(), 3u * 6 + 2);
  EXPECT_THROW(lunar(BigonType::kII, 4), std::invalid_argument);
}

TEST(SporadicTest, ApexSums) {
  const std::pair<const char*, std::vector<double>> orders[] = {
      {"I-II-I-III", {90, 70.5288, 90, 109.4712}},
      {"I-IV-I-V", {90, 63.4349, 90, 116.5651}},
      {"II-IV-III-V", {70.5288, 63.4349, 109.4712, 116.5651}},
  };
  for (const auto& [order, apexes] : orders) {
    double sum = 0;
    for (double a : apexes) sum += a;
    EXPECT_NEAR(sum, 360, 1e-3);
    const Tiling t = sporadic(order);
    EXPECT_NEAR(girard_sum(t), 4 * pi, 1e-9);
    EXPECT_EQ(full_report(t).overlap_pairs.size(), 0u) << order;
  }
  EXPECT_THROW(sporadic("I-I-I-I"), std::invalid_argument);
}

// --- magic patches and composition ----------------------------------------

TEST(MagicPatchTest, IcosidodecahedronHasTwenty) {
  const Tiling t = edge_to_edge_reference("icosidodecahedron");
  const auto patches = find_magic_patches(t);
  EXPECT_EQ(patches.size(), 20u);
  for (const auto& p : patches) {
    EXPECT_EQ(p.size(), 7u);
    EXPECT_NO_THROW(compose(t, p));
  }
  std::map<PatchRelation, int> rel;
  int shared = 0;
  for (std::size_t i = 0; i < patches.size(); ++i) {
    for (std::size_t j = i + 1; j < patches.size(); ++j) {
      try {
        ++rel[patch_relation(t, patches[i], patches[j])];
      } catch (const std::invalid_argument&) {
        ++shared;
      }
    }
  }
  EXPECT_EQ(shared, 90);
  EXPECT_EQ(rel[PatchRelation::kSideOverlap], 60);
  EXPECT_EQ(rel[PatchRelation::kVertexTouch], 30);
  EXPECT_EQ(rel[PatchRelation::kOpposite], 10);
}

TEST(MagicPatchTest, NoneOnTheOctahedron) {
  EXPECT_TRUE(find_magic_patches(edge_to_edge_reference("octahedron")).empty());
}

TEST(MagicPatchTest, SporadicCandidatesLieInTheTypeFiveBigon) {
  // Bigons I, IV, I, V hold 2, 6, 2, 10 tiles: the Type V bigon is 10..19.
  const Tiling t = sporadic("I-IV-I-V");
  const auto patches = find_magic_patches(t);
  ASSERT_FALSE(patches.empty());
  for (const auto& p : patches) {
    for (int id : p) {
      EXPECT_GE(id, 10);
      EXPECT_LE(id, 19);
    }
  }
  // The candidates share tiles, so at most one can be composed.
  for (std::size_t i = 1; i < patches.size(); ++i) {
    EXPECT_THROW(patch_relation(t, patches[0], patches[i]), std::invalid_argument);
  }
}

TEST(ComposeTest, OneTriangleOnTheIcosidodecahedron) {
  const Tiling t = edge_to_edge_reference("icosidodecahedron");
  const Tiling c = compose(t, find_magic_patches(t).front());
  EXPECT_EQ(species_counts(c),
            (Species{{"triangle", 16}, {"pentagon", 9}, {"magic-triangle", 1}}));
  EXPECT_EQ(full_report(c).classification, Classification::kNonEdgeToEdge);
}

TEST(ComposeTest, RoundTripKeepsTheTileMultiset) {
  const Tiling t = edge_to_edge_reference("icosidodecahedron");
  const Tiling c = compose(t, find_magic_patches(t)[3]);
  int magic = -1;
  for (std::size_t i = 0; i < c.tiles.size(); ++i) {
    if (species(c.tiles[i]) == "magic-triangle") magic = static_cast<int>(i);
  }
  ASSERT_GE(magic, 0);
  const Tiling back = decompose(c, magic);
  EXPECT_EQ(species_counts(back), species_counts(t));
  EXPECT_TRUE(equivalent_up_to_isometry(back, t));
  EXPECT_EQ(full_report(back).classification, Classification::kEdgeToEdge);
}

TEST(ComposeTest, DecomposingAPolarTriangle) {
  const Tiling l = lunar(BigonType::kIV, 3);
  int polar = -1;
  for (std::size_t i = 0; i < l.tiles.size(); ++i) {
    if (species(l.tiles[i]) == "magic-triangle") polar = static_cast<int>(i);
  }
  ASSERT_GE(polar, 0);
  EXPECT_TRUE(equivalent_up_to_isometry(decompose(l, polar), composed("icosidodeca-1")));
  EXPECT_THROW(decompose(l, 1), std::invalid_argument);
  EXPECT_THROW(decompose(l, 99), std::invalid_argument);
}

TEST(ComposeTest, ComposedVariants) {
  EXPECT_EQ(species_counts(composed("icosidodeca-4")),
            (Species{{"triangle", 4}, {"magic-triangle", 4}}));
  EXPECT_TRUE(equivalent_up_to_isometry(composed("icosidodeca-2-opposite"),
                                        lunar(BigonType::kIV, 3)));
  int sporadic_count = 0;
  for (const std::string& v : composed_variants()) {
    sporadic_count += v.starts_with("sporadic-");
    const Tiling t = composed(v);
    EXPECT_TRUE(full_report(t).valid()) << v;
  }
  EXPECT_EQ(sporadic_count, 2);
  EXPECT_THROW(composed("icosidodeca-5"), std::invalid_argument);
}

TEST(ComposeTest, OverlappingTrianglePairs) {
  const Tiling side = composed("icosidodeca-2-side");
  const VerificationReport r = full_report(side);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(species_counts(side)["magic-triangle"], 2);
  EXPECT_TRUE(full_report(composed("icosidodeca-3-pairwise")).valid());
}

// --- magic triangle tiling and references ----------------------------------

TEST(MagicTriangleTilingTest, ComplementTile) {
  const Tiling t = magic_triangle_tiling();
  EXPECT_EQ(t.tiles.size(), 8u);
  int reflex = 0;
  for (const PlacedTile& tile : t.tiles) {
    if (!tile.spec.is_reflex()) continue;
    ++reflex;
    EXPECT_NEAR(tile.spec.angle / kDeg, 243.4349, 1e-4);
    EXPECT_NEAR(tile.spec.angle / kDeg, 360 - (180 - std::atan(2.0) / kDeg), 1e-6);
    EXPECT_NEAR(polygon_area(tile.vertices), 3 * tile.spec.angle - pi, 1e-9);
    EXPECT_NEAR(polygon_area(tile.vertices),
                4 * pi - (3 * (pi - std::atan(2.0)) - pi), 1e-9);
  }
  EXPECT_EQ(reflex, 1);
  EXPECT_NEAR(girard_sum(t), 4 * pi, 1e-9);
}

TEST(ReferenceTest, ClassicalSolids) {
  EXPECT_EQ(species_counts(edge_to_edge_reference("octahedron")),
            (Species{{"triangle", 8}}));
  const Tiling ico = edge_to_edge_reference("icosidodecahedron");
  EXPECT_EQ(count_with_angle(ico, 3, std::atan(2.0)), 20);
  EXPECT_EQ(count_with_angle(ico, 5, pi - std::atan(2.0)), 12);
  const Tiling cubo = edge_to_edge_reference("cuboctahedron");
  EXPECT_EQ(species_counts(cubo), (Species{{"square", 6}, {"triangle", 8}}));
  for (const PlacedTile& t : cubo.tiles) EXPECT_NEAR(t.spec.side, pi / 3, 1e-12);
  for (const std::string& name : reference_names()) {
    const Tiling r = edge_to_edge_reference(name);
    EXPECT_NEAR(girard_sum(r), 4 * pi, 1e-9) << name;
    EXPECT_EQ(full_report(r).classification, Classification::kEdgeToEdge) << name;
  }
  EXPECT_THROW(edge_to_edge_reference("rhombicuboctahedron"), std::invalid_argument);
}

// --- manifest --------------------------------------------------------------

TEST(ManifestTest, EveryEntryGeneratesItsSpecies) {
  const auto manifest = family_manifest();
  EXPECT_EQ(manifest.size(), 35u);
  std::set<std::string> names;
  int counted = 0;
  for (const ManifestEntry& e : manifest) names.insert(e.family);
  for (const ManifestEntry& e : manifest) {
    const Tiling t = generate(e.family);
    EXPECT_EQ(species_counts(t), e.expected_species) << e.family;
    EXPECT_EQ(t.family.to_string(), e.family);
    if (e.absorbed_into.empty()) {
      ++counted;
    } else {
      EXPECT_TRUE(names.contains(e.absorbed_into)) << e.absorbed_into;
    }
  }
  // The classification's count of distinct possibilities.
  EXPECT_EQ(counted, 31);
}

TEST(ManifestTest, RigidFamiliesTakeNoParameters) {
  EXPECT_THROW(generate("lunar:II-pentagon", {{"angle", 1.0}}), std::invalid_argument);
  EXPECT_THROW(generate("kaleidoscope:tri-tri", {{"twist", 1.0}}),
               std::invalid_argument);
  EXPECT_THROW(generate("nope:x"), std::invalid_argument);
  const Tiling a = generate("sporadic:II-IV-III-V");
  const Tiling b = generate("sporadic:II-IV-III-V");
  ASSERT_EQ(a.tiles.size(), b.tiles.size());
  for (std::size_t i = 0; i < a.tiles.size(); ++i) {
    for (int k = 0; k < a.tiles[i].n(); ++k) {
      EXPECT_EQ(a.tiles[i].vertex(k).vec(), b.tiles[i].vertex(k).vec());
    }
  }
}

TEST(ManifestTest, ParametersReachTheConstructor) {
  const Tiling t = generate("kaleidoscope:tri-tri", {{"angle", 1.2217}});
  EXPECT_NEAR(t.parameters.at("angle"), 1.2217, 0);
  const Tiling h = generate("two-hemisphere:octa+octa", {{"twist", 0.5}});
  EXPECT_NEAR(h.parameters.at("twist"), 0.5, 0);
}

}  // namespace
}  // namespace sphtile
