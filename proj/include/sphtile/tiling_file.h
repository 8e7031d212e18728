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

// The "sphtile/1" JSON file format.
//
//   {
//     "family": "lunar:II-pentagon",
//     "format": "sphtile/1",
//     "metadata": {"canonical_pose": true, "generator": "sphtile 1.0.0"},
//     "parameters": {"twist": 0.3},
//     "provenance": ["..."],
//     "tiles": [{"angle": 1.9106..., "id": 0, "n": 5,
//                "vertices": [[x, y, z], ...]}, ...]
//   }
//
// Keys are sorted and every real is rounded to 15 significant digits, so the
// same tiling always serializes to the same bytes.

#ifndef SPHTILE_TILING_FILE_H_
#define SPHTILE_TILING_FILE_H_

#include <string>

#include <json.hpp>

#include "sphtile/tiling.h"
#include "sphtile/verify.h"

namespace sphtile {

inline constexpr const char* kFormatTag = "sphtile/1";
inline constexpr const char* kGeneratorVersion = "sphtile 1.0.0";

// Rounds to 15 significant digits.
double round15(double v);

nlohmann::json tiling_to_json(const Tiling& t);
// Throws std::invalid_argument on a wrong format tag, missing fields, or
// vertices off the unit sphere by more than 1e-12.
Tiling tiling_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r, const Tiling& t);

// Two-space indented, trailing newline.
std::string dump(const nlohmann::json& j);

// Throws std::runtime_error when the file cannot be written or read, and
// std::invalid_argument when its contents are malformed.
void save_tiling(const Tiling& t, const std::string& path);
Tiling load_tiling(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace sphtile

#endif  // SPHTILE_TILING_FILE_H_
