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

// Numerical checks on a finished tiling: area closure, overlaps, vertex and
// edge bookkeeping, the edge-to-edge dichotomy and maximal edge-to-edge
// patches.
//
// A vertex is a point where at least three tiles meet, counting both tiles
// with a corner there and tiles whose side passes through it.  A corner of
// angle pi touching a single other tile is therefore not a vertex.

#ifndef SPHTILE_VERIFY_H_
#define SPHTILE_VERIFY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphtile/tiling.h"

namespace sphtile {

struct VerifyOptions {
  double area_tol = 1e-8;
  double cluster_tol = kClusterTol;

  // Parses "area" or "area,cluster"; unset fields keep their defaults.
  // Throws std::invalid_argument on a malformed value.
  static VerifyOptions parse(std::string_view text);
  // parse(SPHTILE_TOL), or the defaults when it is unset.
  static VerifyOptions from_env();
};

struct CornerIncidence {
  int tile = -1;
  int corner = -1;
  double angle = 0;  // measured from the placed vertices
};

enum class VertexClass { kFull, kHalf, kMalformed };
std::string to_string(VertexClass c);

struct VertexRecord {
  UnitVec location;
  std::vector<CornerIncidence> corners;
  std::vector<SideRef> crossing;  // sides passing through the vertex
  VertexClass cls = VertexClass::kMalformed;
  double angle_sum = 0;
};

// Sorted side counts of the tiles with a corner at `v`, e.g. {3, 5}.
std::vector<int> corner_sides(const VertexRecord& v, const Tiling& t);

enum class EdgeMatch { kFullFull, kPartial };
std::string to_string(EdgeMatch m);

struct EdgeRecord {
  UnitVec a, b;
  SideRef left, right;
  EdgeMatch match = EdgeMatch::kPartial;
};

enum class Classification { kEdgeToEdge, kNonEdgeToEdge, kInvalid };
std::string to_string(Classification c);

struct OverlapPair {
  int a = -1;
  int b = -1;
  std::string reason;
};

enum class PatchShape { kSingleton, kBigon, kHemisphere, kOther };
std::string to_string(PatchShape s);

struct MaximalPatch {
  std::vector<int> tiles;  // ascending
  double side = 0;
  PatchShape shape = PatchShape::kOther;
  double apex_angle = 0;                // bigons only
  std::optional<BigonType> bigon_type;  // bigons whose apex matches a type

  std::string tag() const;  // "singleton", "bigon(IV)", "hemisphere", ...
};

struct VerificationReport {
  double area_residual = 0;  // sum of measured Girard areas minus 4pi
  double max_tile_drift = 0;
  std::vector<OverlapPair> overlap_pairs;
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
  int unmatched_boundary_loops = 0;
  Classification classification = Classification::kInvalid;
  std::vector<MaximalPatch> maximal_patches;  // every distinct side length
  std::vector<std::string> diagnostics;

  int count(VertexClass c) const;
  int count(EdgeMatch m) const;
  bool valid() const { return classification != Classification::kInvalid; }
};

// Throws std::invalid_argument for an empty tiling.
VerificationReport full_report(const Tiling& t,
                               const VerifyOptions& options = {});

// Components of the tiles with side `side_length` (within 1e-9) under full
// edge adjacency, each tagged by the shape of its boundary.
std::vector<MaximalPatch> extract_maximal_patches(const Tiling& t,
                                                  double side_length);

// Distinct side lengths in ascending order, merged within 1e-9.
std::vector<double> side_lengths(const Tiling& t);

// True when an isometry maps the tiles of `a` onto those of `b`, matching
// specs and vertex sets within `tol`.  Reflections are tried only when
// `allow_reflection`.
bool equivalent_up_to_isometry(const Tiling& a, const Tiling& b,
                               bool allow_reflection = true,
                               double tol = kClusterTol);

}  // namespace sphtile

#endif  // SPHTILE_VERIFY_H_
