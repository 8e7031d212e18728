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

#include "sphtile/tiling.h"

#include <cmath>

#include <fmt/format.h>

namespace sphtile {

namespace {

struct ClassName {
  FamilyClass cls;
  const char* name;
};

constexpr ClassName kClassNames[] = {
    {FamilyClass::kKaleidoscope, "kaleidoscope"},
    {FamilyClass::kTwoHemisphere, "two-hemisphere"},
    {FamilyClass::kLunar, "lunar"},
    {FamilyClass::kSporadic, "sporadic"},
    {FamilyClass::kComposed, "composed"},
    {FamilyClass::kMagicTriangleTiling, "magic-triangle"},
    {FamilyClass::kReference, "reference"},
};

}  // namespace

std::string to_string(FamilyClass c) {
  for (const ClassName& n : kClassNames) {
    if (n.cls == c) return n.name;
  }
  return "?";
}

std::string FamilyId::to_string() const {
  if (cls == FamilyClass::kMagicTriangleTiling) return "magic-triangle";
  return fmt::format("{}:{}", sphtile::to_string(cls), variant);
}

FamilyId FamilyId::parse(std::string_view text) {
  if (text == "magic-triangle") return {FamilyClass::kMagicTriangleTiling, ""};
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument(
        fmt::format("family '{}' is not of the form class:variant", text));
  }
  const std::string_view head = text.substr(0, colon);
  for (const ClassName& n : kClassNames) {
    if (head == n.name) {
      return {n.cls, std::string(text.substr(colon + 1))};
    }
  }
  throw std::invalid_argument(fmt::format("unknown family class '{}'", head));
}

double Tiling::total_area() const {
  double sum = 0;
  for (const PlacedTile& t : tiles) sum += t.spec.area;
  return sum;
}

std::string species(const PlacedTile& tile) {
  if (tile.spec.is_reflex()) return "complement";
  if (tile.spec.n == 3 && std::abs(tile.spec.side - magic_side()) < 1e-9) {
    return "magic-triangle";
  }
  switch (tile.spec.n) {
    case 3:
      return "triangle";
    case 4:
      return "square";
    case 5:
      return "pentagon";
    default:
      return fmt::format("{}-gon", tile.spec.n);
  }
}

std::map<std::string, int> species_counts(const Tiling& t) {
  std::map<std::string, int> out;
  for (const PlacedTile& tile : t.tiles) ++out[species(tile)];
  return out;
}

}  // namespace sphtile
