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

// The numeric claims of the classification, recomputed and compared with
// their published values.  Each check carries the acceptance row (1 to 12)
// it belongs to.

#ifndef SPHTILE_LEMMAS_H_
#define SPHTILE_LEMMAS_H_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sphtile {

struct LemmaCheck {
  std::string id;      // e.g. "supp-same/tri-square"
  int criterion = 0;   // acceptance row
  std::string anchor;  // the claim being checked
  std::string unit;    // "deg", "rad", "pi", "count", "" ...
  std::vector<double> computed;
  std::vector<double> expected;
  double tolerance = 0;
  bool passed = false;
  std::string detail;
};

// Runs every check whose id contains `filter` (all when empty).  Groups that
// cannot match are skipped without being computed.
std::vector<LemmaCheck> run_lemma_checks(std::string_view filter = "");

nlohmann::json lemmas_to_json(const std::vector<LemmaCheck>& checks);

// The bytes written by one generate / verify / render / export pass over the
// whole manifest, concatenated in manifest order.
std::string pipeline_artifacts();

}  // namespace sphtile

#endif  // SPHTILE_LEMMAS_H_
