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

#include "sphtile/roots.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

namespace sphtile {

double bisect_root(const ScalarFn& fn, double lo, double hi, double width) {
  const double flo = fn(lo), fhi = fn(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) {
    throw std::invalid_argument("bisect_root: interval does not bracket a root");
  }
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::bisect(
      fn, lo, hi, [width](double a, double b) { return b - a < width; }, iters);
  return 0.5 * (r.first + r.second);
}

std::vector<double> open_grid(double lo, double hi, int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    xs[i] = lo + (hi - lo) * (i + 1) / (count + 1);
  }
  return xs;
}

std::vector<double> grid_roots(const ScalarFn& fn, double lo, double hi,
                               int count, double width) {
  const std::vector<double> xs = open_grid(lo, hi, count);
  std::vector<double> ys(xs.size());
  std::transform(xs.begin(), xs.end(), ys.begin(), fn);
  std::vector<double> roots;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) {
      roots.push_back(xs[i]);
      continue;
    }
    if (i + 1 < xs.size() && ys[i + 1] != 0 && (ys[i] < 0) != (ys[i + 1] < 0)) {
      roots.push_back(bisect_root(fn, xs[i], xs[i + 1], width));
    }
  }
  return roots;
}

namespace {

Extremum refine_minimum(const ScalarFn& fn, double lo, double hi, int count) {
  const std::vector<double> xs = open_grid(lo, hi, count);
  std::size_t best = 0;
  double best_y = fn(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double y = fn(xs[i]);
    if (y < best_y) {
      best_y = y;
      best = i;
    }
  }
  const double a = best == 0 ? xs[0] : xs[best - 1];
  const double b = best + 1 == xs.size() ? xs.back() : xs[best + 1];
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::brent_find_minima(fn, a, b, 52, iters);
  if (r.second < best_y) return {r.first, r.second};
  return {xs[best], best_y};
}

}  // namespace

Extremum grid_minimum(const ScalarFn& fn, double lo, double hi, int count) {
  return refine_minimum(fn, lo, hi, count);
}

Extremum grid_maximum(const ScalarFn& fn, double lo, double hi, int count) {
  const Extremum e =
      refine_minimum([&](double x) { return -fn(x); }, lo, hi, count);
  return {e.x, -e.value};
}

}  // namespace sphtile
