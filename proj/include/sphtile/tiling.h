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

#ifndef SPHTILE_TILING_H_
#define SPHTILE_TILING_H_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphtile/patch_forge.h"

namespace sphtile {

// A constructor could not assemble the requested tiling.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FamilyClass {
  kKaleidoscope,
  kTwoHemisphere,
  kLunar,
  kSporadic,
  kComposed,
  kMagicTriangleTiling,
  kReference,
};

std::string to_string(FamilyClass c);

// Written "class:variant", e.g. "lunar:II-pentagon".  The magic triangle
// tiling is just "magic-triangle".
struct FamilyId {
  FamilyClass cls = FamilyClass::kReference;
  std::string variant;

  std::string to_string() const;
  static FamilyId parse(std::string_view text);
  bool operator==(const FamilyId&) const = default;
};

struct Tiling {
  std::vector<PlacedTile> tiles;
  FamilyId family;
  std::map<std::string, double> parameters;
  std::vector<std::string> provenance;

  double total_area() const;
};

// "triangle", "square", "pentagon", "<n>-gon", "magic-triangle" (side 3pi/5)
// or "complement" (angle above pi).
std::string species(const PlacedTile& tile);
std::map<std::string, int> species_counts(const Tiling& t);

}  // namespace sphtile

#endif  // SPHTILE_TILING_H_
