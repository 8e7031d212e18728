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

#include "sphtile/lemmas.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "sphtile/catalog.h"
#include "sphtile/render.h"
#include "sphtile/supp_kernel.h"
#include "sphtile/tiling_file.h"
#include "sphtile/verify.h"

namespace sphtile {

using std::numbers::pi;

namespace {

constexpr double kDeg = 180 / pi;

using Checks = std::vector<LemmaCheck>;

void near(Checks& out, std::string id, int criterion, std::string anchor,
          std::string unit, std::vector<double> computed,
          std::vector<double> expected, double tol, std::string detail = "") {
  bool ok = computed.size() == expected.size();
  for (std::size_t i = 0; ok && i < computed.size(); ++i) {
    ok = std::abs(computed[i] - expected[i]) <= tol;
  }
  out.push_back({std::move(id), criterion, std::move(anchor), std::move(unit),
                 std::move(computed), std::move(expected), tol, ok,
                 std::move(detail)});
}

void holds(Checks& out, std::string id, int criterion, std::string anchor,
           bool ok, std::string detail, std::vector<double> computed = {}) {
  out.push_back({std::move(id), criterion, std::move(anchor), "", std::move(computed),
                 {}, 0, ok, std::move(detail)});
}

// --- 1 to 4: constants and length functions ---------------------------------

void supp_same(Checks& out) {
  const std::vector<SuppSamePair> pairs = supp_same_pairs();
  struct Want {
    SuppKind kind;
    double a, b, side;
  };
  const Want wants[] = {{SuppKind::kTriTri, 90, 90, pi / 2},
                        {SuppKind::kTriSquare, 70.5288, 109.4712, pi / 3},
                        {SuppKind::kTriPent, 63.4349, 116.5651, pi / 5}};
  for (const Want& w : wants) {
    const auto it = std::find_if(pairs.begin(), pairs.end(),
                                 [&](const SuppSamePair& p) { return p.kind == w.kind; });
    const std::string id = "supp-same/" + to_string(w.kind);
    const char* anchor = "supplementary tiles with equal sides";
    if (it == pairs.end() || pairs.size() != 3) {
      holds(out, id, 1, anchor, false,
            fmt::format("{} pairs found", pairs.size()));
      continue;
    }
    const bool angles = std::abs(it->triangle_angle * kDeg - w.a) <= 5e-4 &&
                        std::abs(it->partner_angle * kDeg - w.b) <= 5e-4;
    const bool side = std::abs(it->side - w.side) <= 1e-9;
    const int changes = supp_root_sign_changes(it->partner_n);
    out.push_back({id, 1, anchor, "deg, deg, rad",
                   {it->triangle_angle * kDeg, it->partner_angle * kDeg, it->side},
                   {w.a, w.b, w.side}, 5e-4, angles && side && changes == 1,
                   fmt::format("angles within 5e-4 deg, side within 1e-9 rad; "
                               "{} sign change(s) on the uniqueness grid",
                               changes)});
  }
}

void f_roots(Checks& out) {
  const PerfectFitSignature sig{1, 1, 0, 0};
  const std::vector<GRoot> roots = solve_g_equals(sig, 3 * pi / 5);
  std::vector<double> tri, sq;
  for (const GRoot& r : roots) {
    if (r.endpoint_limit) continue;
    tri.push_back(r.alpha * kDeg);
    sq.push_back(180 - r.alpha * kDeg);
  }
  std::sort(sq.begin(), sq.end(), std::greater<>());
  near(out, "f-roots/triangle-angles", 2,
       "triangle and square sides summing to 3pi/5: two possibilities", "deg",
       tri, {64.6756, 88.2545}, 5e-4);
  near(out, "f-roots/square-angles", 2, "paired square angles", "deg", sq,
       {115.3243, 91.7455}, 5e-4);
  if (tri.size() == 2) {
    const double side = side_from_angle(4, pi - tri[1] / kDeg);
    out.push_back({"f-roots/square-side", 2,
                   "the square's side is about .11pi, below pi/5", "pi",
                   {side / pi}, {0.11}, 5e-3,
                   std::abs(side / pi - 0.11) <= 5e-3 && side < pi / 5,
                   "88.2545 deg branch"});
  } else {
    holds(out, "f-roots/square-side", 2, "square side", false, "no root pair");
  }
}

void side_lengths(Checks& out) {
  near(out, "side-lengths/square-116.565", 3,
       "square of angle 116.565 deg has side about .3752pi", "pi",
       {side_from_angle(4, pi - std::atan(2.0)) / pi}, {0.3752}, 5e-4);
  const double r = side_from_angle(3, std::acos(-1.0 / 3)) - std::acos(-0.25);
  out.push_back({"side-lengths/triangle-109.4712", 3,
                 "triangle of angle 109.4712 deg has side arccos(-1/4)", "rad",
                 {r}, {0}, 1e-10, std::abs(r) < 1e-10, "residual"});
  near(out, "side-lengths/triangle-2pi5", 3,
       "triangle of side 2pi/5 has angle 76.345 deg", "deg",
       {angle_from_side(3, 2 * pi / 5) * kDeg}, {76.345}, 5e-4);
  near(out, "side-lengths/square-2pi5", 3,
       "square of side 2pi/5 has angle 121.86 deg", "deg",
       {angle_from_side(4, 2 * pi / 5) * kDeg}, {121.86}, 5e-3);
}

void g_window(Checks& out) {
  const Extremum m2010 = g_maximum({2, 0, 1, 0});
  out.push_back({"g-window/max-2010", 4,
                 "two triangles and a pentagon never reach 2.4", "rad",
                 {m2010.value}, {2.4}, 0, m2010.value < 2.4, "bound: < 2.4"});
  near(out, "g-window/max-1010", 4,
       "supplementary triangle and pentagon reach at most .436pi", "pi",
       {g_maximum({1, 0, 1, 0}).value / pi}, {0.436}, 5e-3);
  near(out, "g-window/inf-1001", 4,
       "two supplementary triangles are at least .60817pi long", "pi",
       {g_infimum({1, 0, 0, 1}).value / pi}, {0.60817}, 5e-5);
  for (const Impossibility& imp : declared_impossible_fits()) {
    std::vector<double> interior;
    int limits = 0;
    for (const GRoot& r : solve_g_equals(imp.sig, imp.target)) {
      if (r.endpoint_limit) {
        ++limits;
      } else {
        interior.push_back(r.alpha);
      }
    }
    holds(out,
          fmt::format("g-window/no-fit/{}@{:.4f}pi", imp.sig.to_string(),
                      imp.target / pi),
          4, imp.note, interior.empty(),
          fmt::format("{} interior root(s), {} degenerate end limit(s)",
                      interior.size(), limits),
          interior);
  }
  for (const PerfectFitSignature& sig : classification_signatures()) {
    const double d2 = g_max_second_difference(sig);
    holds(out, "g-window/concave/" + sig.to_string(), 4,
          "length function is concave down", d2 <= 1e-8,
          fmt::format("largest second difference {:.3e} on 1e4 points", d2),
          {d2});
  }
}

// --- 5 to 9: catalog and verifier ------------------------------------------

struct Member {
  std::string family;
  Tiling tiling;
};

const std::vector<Member>& catalog_members() {
  static const std::vector<Member> kMembers = [] {
    std::vector<Member> m;
    for (const ManifestEntry& e : family_manifest()) {
      m.push_back({e.family, generate(e.family)});
    }
    return m;
  }();
  return kMembers;
}

const VerificationReport& report_for(std::size_t i) {
  static std::vector<VerificationReport> kReports = [] {
    std::vector<VerificationReport> r;
    for (const Member& m : catalog_members()) r.push_back(full_report(m.tiling));
    return r;
  }();
  return kReports[i];
}

double girard_total(const Tiling& t) {
  double sum = 0;
  for (const PlacedTile& tile : t.tiles) sum += polygon_area(tile.vertices);
  return sum;
}

void area_closure(Checks& out) {
  for (const Member& m : catalog_members()) {
    const double res = girard_total(m.tiling) - 4 * pi;
    out.push_back({"area-closure/" + m.family, 5,
                   "tile areas add up to the sphere", "sr", {res}, {0}, 1e-8,
                   std::abs(res) < 1e-8, "measured Girard sum minus 4pi"});
  }
  for (const char* kind :
       {"octa", "cubocta", "icosidodeca", "monogon7", "icosidodeca-composed"}) {
    double sum = 0;
    for (const PlacedTile& t : build_hemisphere(HemisphereKind::parse(kind))) {
      sum += polygon_area(t.vertices);
    }
    const double res = sum - 2 * pi;
    out.push_back({std::string("area-closure/hemisphere-") + kind, 5,
                   "hemisphere patch covers half the sphere", "sr", {res},
                   {0}, 1e-9, std::abs(res) < 1e-9, "Girard sum minus 2pi"});
  }
}

void tile_counts(Checks& out) {
  const std::pair<KaleidoscopeVariant, std::map<std::string, int>> kal[] = {
      {KaleidoscopeVariant::kTriTri, {{"triangle", 8}}},
      {KaleidoscopeVariant::kSquareTri, {{"square", 6}, {"triangle", 8}}},
      {KaleidoscopeVariant::kTriSquare, {{"square", 6}, {"triangle", 8}}},
      {KaleidoscopeVariant::kPentTri, {{"pentagon", 12}, {"triangle", 20}}},
      {KaleidoscopeVariant::kTriPent, {{"pentagon", 12}, {"triangle", 20}}},
  };
  for (const auto& [v, want] : kal) {
    const KaleidoscopeRange r = kaleidoscope_range(v);
    const Tiling t = kaleidoscope(v, 0.5 * (r.lo + r.hi));
    int small = 0;
    for (const PlacedTile& tile : t.tiles) {
      small += std::abs(tile.spec.angle - t.parameters.at("angle")) < 1e-12;
    }
    const char* names[] = {"", "", "", "triangle", "square", "pentagon"};
    const int small_want =
        r.small_n == r.large_n ? 4 : want.at(names[r.small_n]);
    holds(out, "tile-counts/kaleidoscope-" + to_string(v), 6,
          "kaleidoscope tile multiset",
          species_counts(t) == want && small == small_want,
          fmt::format("{}; {} small tiles", species_counts(t), small));
  }
  const std::pair<BigonType, std::map<std::string, int>> bigons[] = {
      {BigonType::kI, {{"triangle", 2}}},
      {BigonType::kII, {{"triangle", 2}, {"square", 1}}},
      {BigonType::kIII, {{"triangle", 2}, {"square", 2}}},
      {BigonType::kIV, {{"triangle", 4}, {"pentagon", 2}}},
      {BigonType::kV, {{"triangle", 6}, {"pentagon", 4}}},
  };
  for (const auto& [type, want] : bigons) {
    Tiling t;
    t.tiles = build_bigon(type, UnitVec::north(), 0.0).tiles;
    holds(out, "tile-counts/bigon-" + to_string(type), 6, "bigon composition",
          species_counts(t) == want, fmt::format("{}", species_counts(t)));
  }
  const std::tuple<BigonType, int, int> lunars[] = {
      {BigonType::kII, 3, 3}, {BigonType::kII, 5, 5},
      {BigonType::kIV, 3, 3}, {BigonType::kIV, 4, 4}};
  for (const auto& [type, polar, k] : lunars) {
    const Tiling t = lunar(type, polar);
    const int per = static_cast<int>(build_bigon(type, UnitVec::north(), 0.0).tiles.size());
    const double polar_angle = pi - bigon_apex_angle(type);
    const auto polar_tiles = std::count_if(
        t.tiles.begin(), t.tiles.end(), [&](const PlacedTile& p) {
          return p.n() == polar && std::abs(p.spec.angle - polar_angle) < 1e-12;
        });
    holds(out, "tile-counts/" + t.family.variant, 6,
          "lunar tiling: k bigons and two polar tiles",
          static_cast<int>(t.tiles.size()) == k * per + 2 && polar_tiles == 2,
          fmt::format("{} tiles = {} bigons x {} + {} polar", t.tiles.size(), k,
                      per, polar_tiles));
  }
  for (const char* order : {"I-II-I-III", "I-IV-I-V", "II-IV-III-V"}) {
    const Tiling t = sporadic(order);
    std::size_t want = 0;
    std::string names(order);
    std::vector<std::string> parts;
    for (std::size_t s = 0, e; s <= names.size(); s = e + 1) {
      e = names.find('-', s);
      if (e == std::string::npos) e = names.size();
      parts.push_back(names.substr(s, e - s));
    }
    for (const std::string& p : parts) {
      const BigonType b = p == "I"     ? BigonType::kI
                          : p == "II"  ? BigonType::kII
                          : p == "III" ? BigonType::kIII
                          : p == "IV"  ? BigonType::kIV
                                       : BigonType::kV;
      want += build_bigon(b, UnitVec::north(), 0.0).tiles.size();
    }
    holds(out, std::string("tile-counts/sporadic-") + order, 6,
          "sporadic tiling: four bigons", parts.size() == 4 && t.tiles.size() == want,
          fmt::format("{} tiles from {} bigons", t.tiles.size(), parts.size()));
  }
  const Tiling m = magic_triangle_tiling();
  holds(out, "tile-counts/magic-triangle", 6, "magic triangle tiling has 8 tiles",
        m.tiles.size() == 8, fmt::format("{} tiles", m.tiles.size()));
}

bool allowed_pair(const std::vector<int>& sides) {
  return sides.size() == 2 && sides[0] == 3 && sides[1] >= 3 && sides[1] <= 5;
}

void verifier_invariants(Checks& out) {
  const auto& members = catalog_members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Member& m = members[i];
    const VerificationReport& r = report_for(i);
    int bad_half = 0;
    for (const VertexRecord& v : r.vertices) {
      if (v.cls != VertexClass::kHalf) continue;
      const bool sum_ok = std::abs(v.angle_sum - pi) <= 1e-7;
      if (!sum_ok || !allowed_pair(corner_sides(v, m.tiling))) ++bad_half;
    }
    holds(out, "verifier/" + m.family, 7,
          "no overlaps; half vertices are tri-tri, tri-square or tri-pent",
          r.valid() && r.overlap_pairs.empty() && bad_half == 0,
          fmt::format("{}, {} overlap pair(s), {} half vertices, {} bad",
                      to_string(r.classification), r.overlap_pairs.size(),
                      r.count(VertexClass::kHalf), bad_half));
    if (m.tiling.family.cls == FamilyClass::kSporadic) {
      std::vector<double> sums;
      for (const UnitVec& pole : {UnitVec::north(), UnitVec::south()}) {
        for (const VertexRecord& v : r.vertices) {
          if (angular_distance(v.location, pole) < kClusterTol &&
              v.cls == VertexClass::kFull) {
            sums.push_back(v.angle_sum);
          }
        }
      }
      near(out, "verifier/pole-sum/" + m.tiling.family.variant, 7,
           "bigon apexes close up around both poles", "rad", sums,
           {2 * pi, 2 * pi}, 1e-9);
    }
  }
}

void minimal_patches(Checks& out) {
  for (const Member& m : catalog_members()) {
    const Tiling d = decompose_all(m.tiling);
    if (std::any_of(d.tiles.begin(), d.tiles.end(),
                    [](const PlacedTile& t) { return t.spec.is_reflex(); })) {
      continue;  // outside the lemma's hypotheses; see README
    }
    const VerificationReport r = full_report(d);
    if (r.classification != Classification::kNonEdgeToEdge) continue;
    const double side = sphtile::side_lengths(d).front();
    std::vector<std::string> tags;
    bool ok = true;
    for (const MaximalPatch& p : extract_maximal_patches(d, side)) {
      if (p.tiles.size() < 2) continue;
      tags.push_back(p.tag());
      ok = ok && (p.shape == PatchShape::kBigon ||
                  p.shape == PatchShape::kHemisphere);
      ok = ok && !(p.shape == PatchShape::kBigon && p.apex_angle > pi);
    }
    holds(out, "minimal-patch/" + m.family, 8,
          "every maximal edge-to-edge patch of smallest tiles is a bigon", ok,
          tags.empty() ? "all singletons" : fmt::format("{}", tags));
  }
}

void identities(Checks& out) {
  const char* anchor = "same tiling up to isometry";
  holds(out, "identity/square-tri-cuboctahedron", 9, anchor,
        equivalent_up_to_isometry(
            kaleidoscope(KaleidoscopeVariant::kSquareTri, std::acos(-1.0 / 3)),
            edge_to_edge_reference("cuboctahedron")),
        "square-tri at arccos(-1/3) vs cuboctahedron");
  holds(out, "identity/pent-tri-icosidodecahedron", 9, anchor,
        equivalent_up_to_isometry(
            kaleidoscope(KaleidoscopeVariant::kPentTri, pi - std::atan(2.0)),
            edge_to_edge_reference("icosidodecahedron")),
        "pent-tri at pi - arctan 2 vs icosidodecahedron");
  const Tiling four = composed("icosidodeca-4");
  holds(out, "identity/compose-four-kaleidoscope", 9, anchor,
        equivalent_up_to_isometry(
            four, kaleidoscope(KaleidoscopeVariant::kTriTri, std::atan(2.0))),
        "four disjoint magic triangles vs tri-tri kaleidoscope at arctan 2, "
        "whose large triangles have side 3pi/5");
  holds(out, "identity/compose-opposite-lunar", 9, anchor,
        equivalent_up_to_isometry(composed("icosidodeca-2-opposite"),
                                  lunar(BigonType::kIV, 3)),
        "two opposite magic triangles vs lunar(IV, triangle)");
}

// --- 10 to 12 -------------------------------------------------------------

void appendix(Checks& out) {
  for (AppendixKind k : {AppendixKind::kMagicTriangle, AppendixKind::kPentagon5Tri,
                         AppendixKind::kOctagon, AppendixKind::kDecagon}) {
    const std::string id = "appendix/" + to_string(k);
    try {
      const AppendixPatch p = appendix_decomposition(k);
      double worst = 0;
      for (std::size_t i = 0; i < p.boundary.corners.size(); ++i) {
        worst = std::max({worst, std::abs(p.boundary.angles[i] - p.outer.angle),
                          std::abs(p.boundary.sides[i] - p.outer.side)});
      }
      double drift = 0;
      for (const PlacedTile& t : p.tiles) drift = std::max(drift, tile_drift(t));
      const bool ok = static_cast<int>(p.boundary.corners.size()) == p.outer.n &&
                      worst <= 1e-9 && drift <= 1e-9;
      holds(out, id, 10, "decomposition closes to a regular polygon", ok,
            fmt::format("{} tiles, outer {}, boundary deviation {:.2e}, tile "
                        "drift {:.2e}",
                        p.tiles.size(), p.outer.label(), worst, drift),
            {worst, drift});
    } catch (const std::exception& e) {
      holds(out, id, 10, "decomposition builds", false, e.what());
    }
  }
  for (auto [name, s, eq] :
       {std::tuple{"octagon", octagon_decomposition_side(),
                   std::function<double(double)>([](double x) {
                     return angle_from_side(3, x) + 3 * angle_from_side(4, x);
                   })},
        std::tuple{"decagon", decagon_decomposition_side(),
                   std::function<double(double)>([](double x) {
                     return angle_from_side(3, x) + 2 * angle_from_side(4, x) +
                            angle_from_side(5, x);
                   })}}) {
    near(out, std::string("appendix/angle-system-") + name, 10,
         "angles at an interior vertex add to 2pi", "rad", {eq(s)}, {2 * pi},
         1e-9, fmt::format("common side {:.9f}", s));
  }
  const RegularPolygonSpec spec = magic_triangle_spec();
  const PlacedTile magic = place_polygon_around(
      spec, UnitVec::north(), UnitVec::spherical(spec.circumradius, 0.7));
  const PlacedTile back = compose_magic_triangle(magic_triangle_decomposition(magic));
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    double best = pi;
    for (const UnitVec& v : back.vertices) {
      best = std::min(best, angular_distance(v, magic.vertex(i)));
    }
    worst = std::max(worst, best);
  }
  near(out, "appendix/magic-round-trip", 10,
       "compose undoes decompose", "rad", {worst}, {0}, 1e-12);
}

void monotonicity(Checks& out) {
  const int kGrid = 1000;
  // Side decreases with n at fixed angle, on the range valid for n <= 6.
  int violations = 0;
  for (double a : open_grid(2 * pi / 3, pi, kGrid)) {
    for (int n = 3; n < 6; ++n) {
      if (!(side_from_angle(n, a) > side_from_angle(n + 1, a))) ++violations;
    }
  }
  holds(out, "monotonicity/side-decreases-in-n", 11,
        "equal angles: more sides means shorter sides", violations == 0,
        fmt::format("{} violations on {} angles, n = 3..6", violations, kGrid));
  violations = 0;
  for (int n = 3; n <= 6; ++n) {
    double prev = -1;
    for (double a : open_grid(min_angle(n), pi, kGrid)) {
      const double s = side_from_angle(n, a);
      if (!(s > prev)) ++violations;
      prev = s;
    }
  }
  holds(out, "monotonicity/side-increases-in-angle", 11,
        "side grows with the angle", violations == 0,
        fmt::format("{} violations", violations));
  violations = 0;
  for (double s : open_grid(0, 2 * pi / 6, kGrid)) {
    for (int n = 3; n < 6; ++n) {
      if (!(angle_from_side(n, s) < angle_from_side(n + 1, s))) ++violations;
    }
  }
  holds(out, "monotonicity/angle-increases-in-n", 11,
        "equal sides: more sides means larger angles", violations == 0,
        fmt::format("{} violations on {} sides, n = 3..6", violations, kGrid));
  violations = 0;
  double worst_trip = 0;
  for (int n = 3; n <= 6; ++n) {
    for (double a : open_grid(min_angle(n), pi, kGrid)) {
      const double s = side_from_angle(n, a);
      if (s > 2 * pi / n) ++violations;
      worst_trip = std::max(worst_trip, std::abs(angle_from_side(n, s) - a));
    }
    if (side_from_angle(n, pi) != 2 * pi / n &&
        std::abs(side_from_angle(n, pi) - 2 * pi / n) > 1e-15) {
      ++violations;
    }
    if (!(side_from_angle(n, pi - 1e-6) < 2 * pi / n)) ++violations;
  }
  holds(out, "monotonicity/side-bound", 11,
        "side at most 2pi/n, equal only at angle pi", violations == 0,
        fmt::format("{} violations; worst round trip {:.2e} rad", violations,
                    worst_trip),
        {worst_trip});
  near(out, "monotonicity/round-trip", 11, "angle_from_side inverts side_from_angle",
       "rad", {worst_trip}, {0}, 1e-10);
  int accepted = 0;
  for (int n = 3; n <= 6; ++n) {
    for (double a : {min_angle(n), min_angle(n) - 1e-3, 0.0}) {
      try {
        side_from_angle(n, a);
        ++accepted;
      } catch (const std::domain_error&) {
      }
    }
    for (double s : {0.0, -1e-3, 2 * pi / n + 1e-9}) {
      try {
        angle_from_side(n, s);
        ++accepted;
      } catch (const std::domain_error&) {
      }
    }
  }
  holds(out, "monotonicity/angle-bound", 11,
        "angles at or below (n-2)pi/n are rejected", accepted == 0,
        fmt::format("{} invalid requests accepted", accepted));
}

void determinism(Checks& out) {
  const std::string first = pipeline_artifacts();
  const std::string second = pipeline_artifacts();
  holds(out, "determinism/pipeline", 12,
        "regenerating the manifest gives identical bytes", first == second,
        fmt::format("{} bytes per pass", first.size()),
        {static_cast<double>(first.size())});
}

struct Group {
  const char* prefix;
  void (*run)(Checks&);
};

constexpr Group kGroups[] = {
    {"supp-same", supp_same},         {"f-roots", f_roots},
    {"side-lengths", side_lengths},   {"g-window", g_window},
    {"area-closure", area_closure},   {"tile-counts", tile_counts},
    {"verifier", verifier_invariants}, {"minimal-patch", minimal_patches},
    {"identity", identities},         {"appendix", appendix},
    {"monotonicity", monotonicity},   {"determinism", determinism},
};

}  // namespace

std::string pipeline_artifacts() {
  std::string all;
  for (const ManifestEntry& e : family_manifest()) {
    const Tiling t = tiling_from_json(tiling_to_json(generate(e.family)));
    all += dump(tiling_to_json(t));
    all += dump(report_to_json(full_report(t), t));
    all += render_svg(t);
    all += export_obj(t);
  }
  return all;
}

std::vector<LemmaCheck> run_lemma_checks(std::string_view filter) {
  Checks all;
  for (const Group& g : kGroups) {
    const std::string_view prefix = g.prefix;
    if (!filter.empty() && prefix.find(filter) == std::string_view::npos &&
        !filter.starts_with(prefix)) {
      continue;
    }
    g.run(all);
  }
  std::erase_if(all, [&](const LemmaCheck& c) {
    return c.id.find(filter) == std::string::npos;
  });
  return all;
}

nlohmann::json lemmas_to_json(const std::vector<LemmaCheck>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  int failed = 0;
  for (const LemmaCheck& c : checks) {
    std::vector<double> computed, expected;
    for (double v : c.computed) computed.push_back(round15(v));
    for (double v : c.expected) expected.push_back(round15(v));
    arr.push_back({{"id", c.id},
                   {"criterion", c.criterion},
                   {"anchor", c.anchor},
                   {"unit", c.unit},
                   {"computed", computed},
                   {"expected", expected},
                   {"tolerance", c.tolerance},
                   {"pass", c.passed},
                   {"detail", c.detail}});
    failed += !c.passed;
  }
  return {{"format", "sphtile-lemmas/1"},
          {"checks", arr},
          {"total", checks.size()},
          {"failed", failed}};
}

}  // namespace sphtile
