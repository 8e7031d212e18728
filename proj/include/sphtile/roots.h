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

// Bracketing root finders and grid scans over one real variable.

#ifndef SPHTILE_ROOTS_H_
#define SPHTILE_ROOTS_H_

#include <functional>
#include <vector>

namespace sphtile {

using ScalarFn = std::function<double(double)>;

// Root of `fn` on [lo, hi], where fn(lo) and fn(hi) differ in sign (or one
// is zero).  Stops when the bracket is narrower than `width`.
double bisect_root(const ScalarFn& fn, double lo, double hi, double width);

// Grid points lo + (hi - lo) * (i + 1) / (count + 1), i < count: the open
// interval sampled without its endpoints.
std::vector<double> open_grid(double lo, double hi, int count);

// All sign changes of `fn` on open_grid(lo, hi, count), each refined by
// bisection to `width`.  Tangent (even-order) roots are not reported.
std::vector<double> grid_roots(const ScalarFn& fn, double lo, double hi,
                               int count = 10000, double width = 1e-12);

struct Extremum {
  double x = 0;
  double value = 0;
};

// Maximum of `fn` on the open interval: best grid point, then refined with
// Brent's method on the neighbouring cells.
Extremum grid_maximum(const ScalarFn& fn, double lo, double hi,
                      int count = 10000);
Extremum grid_minimum(const ScalarFn& fn, double lo, double hi,
                      int count = 10000);

}  // namespace sphtile

#endif  // SPHTILE_ROOTS_H_
