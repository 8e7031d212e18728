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

// SVG drawings and OBJ polylines.  Tile sides are sampled every 0.5 degrees.

#ifndef SPHTILE_RENDER_H_
#define SPHTILE_RENDER_H_

#include <string>
#include <string_view>
#include <vector>

#include "sphtile/tiling.h"

namespace sphtile {

enum class Projection { kOrtho, kStereo };
Projection parse_projection(std::string_view text);

struct RenderOptions {
  Projection projection = Projection::kOrtho;
  // The point drawn at the image center, in degrees.
  double view_lat = 30;
  double view_lon = 45;
  int size = 600;  // pixels
  // Stereographic drawings cover [-extent, extent] in projected units.
  double stereo_extent = 3;
};

// Sample points along every side, first corner included, last excluded.
std::vector<UnitVec> sampled_boundary(const PlacedTile& tile,
                                      double max_step = 0.5 * 3.14159265358979323846 / 180);

// Orthographic: the back hemisphere is dashed.  Stereographic: projected
// from the antipode of the view point, so tiles around the view point are
// bounded; a tile containing the projection point is outlined, not filled.
std::string render_svg(const Tiling& t, const RenderOptions& options = {});

std::string export_obj(const Tiling& t);

}  // namespace sphtile

#endif  // SPHTILE_RENDER_H_
