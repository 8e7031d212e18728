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

#include "sphtile/supp_kernel.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "sphtile/regular_polygon.h"

namespace sphtile {

using std::numbers::pi;

std::string to_string(SuppKind kind) {
  switch (kind) {
    case SuppKind::kTriTri:
      return "tri-tri";
    case SuppKind::kTriSquare:
      return "tri-square";
    case SuppKind::kTriPent:
      return "tri-pent";
  }
  return "?";
}

Interval supp_domain(int partner_n) {
  return {pi / 3, 2 * pi / partner_n};
}

namespace {

double supp_gap(int n, double a) {
  return side_from_angle(3, a) - side_from_angle(n, pi - a);
}

}  // namespace

int supp_root_sign_changes(int partner_n, int count) {
  const Interval d = supp_domain(partner_n);
  const std::vector<double> xs = open_grid(d.lo, d.hi, count);
  int changes = 0;
  double prev = supp_gap(partner_n, xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = supp_gap(partner_n, xs[i]);
    if ((prev < 0) != (cur < 0)) ++changes;
    prev = cur;
  }
  return changes;
}

std::vector<SuppSamePair> supp_same_pairs() {
  std::vector<SuppSamePair> out;
  const SuppKind kinds[] = {SuppKind::kTriTri, SuppKind::kTriSquare,
                            SuppKind::kTriPent};
  for (int n = 3; n <= 5; ++n) {
    const Interval d = supp_domain(n);
    const auto gap = [n](double a) { return supp_gap(n, a); };
    const std::vector<double> roots = grid_roots(gap, d.lo, d.hi, 1000, 1e-15);
    if (roots.size() != 1) {
      throw std::logic_error(fmt::format(
          "expected one supp-same root for partner {}, found {}", n,
          roots.size()));
    }
    const double a = roots.front();
    out.push_back({kinds[n - 3], a, n, pi - a, side_from_angle(3, a)});
  }
  return out;
}

double f(double alpha) {
  return side_from_angle(3, alpha) + side_from_angle(4, pi - alpha);
}

std::string PerfectFitSignature::to_string() const {
  return fmt::format("({},{},{},{})", a, b, c, d);
}

Interval g_domain(const PerfectFitSignature& sig) {
  double hi = pi;
  if (sig.b > 0) hi = std::min(hi, pi / 2);
  if (sig.c > 0) hi = std::min(hi, 2 * pi / 5);
  if (sig.d > 0) hi = std::min(hi, 2 * pi / 3);
  return {pi / 3, hi};
}

double g(double alpha, const PerfectFitSignature& sig) {
  if (sig.a < 1 || sig.b < 0 || sig.c < 0 || sig.d < 0) {
    throw std::domain_error("signature needs A >= 1 and nonnegative counts");
  }
  double sum = sig.a * side_from_angle(3, alpha);
  if (sig.b) sum += sig.b * side_from_angle(4, pi - alpha);
  if (sig.c) sum += sig.c * side_from_angle(5, pi - alpha);
  if (sig.d) sum += sig.d * side_from_angle(3, pi - alpha);
  return sum;
}

namespace {

// g at a domain end, where the degenerate tiles contribute side 0.
double g_end_limit(double alpha, const PerfectFitSignature& sig) {
  auto side_or_zero = [](int n, double a) {
    return a <= min_angle(n) + 1e-15 ? 0.0 : side_from_angle(n, a);
  };
  return sig.a * side_or_zero(3, alpha) + sig.b * side_or_zero(4, pi - alpha) +
         sig.c * side_or_zero(5, pi - alpha) +
         sig.d * side_or_zero(3, pi - alpha);
}

}  // namespace

std::vector<GRoot> solve_g_equals(const PerfectFitSignature& sig,
                                  double target, double alpha_min,
                                  double alpha_max) {
  const Interval d = g_domain(sig);
  if (alpha_min < d.lo - 1e-15 || alpha_max > d.hi + 1e-15 ||
      !(alpha_min < alpha_max)) {
    throw std::domain_error(fmt::format(
        "interval ({}, {}) is not inside the domain of g{}", alpha_min,
        alpha_max, sig.to_string()));
  }
  std::vector<GRoot> out;
  const auto h = [&](double a) { return g(a, sig) - target; };
  for (double r : grid_roots(h, alpha_min, alpha_max)) {
    out.push_back({r, false});
  }
  for (double end : {alpha_min, alpha_max}) {
    const bool degenerate = std::abs(end - d.lo) < 1e-15 ||
                            (std::abs(end - d.hi) < 1e-15 && d.hi < pi);
    if (degenerate && std::abs(g_end_limit(end, sig) - target) < 1e-9) {
      out.push_back({end, true});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GRoot& x, const GRoot& y) { return x.alpha < y.alpha; });
  return out;
}

std::vector<GRoot> solve_g_equals(const PerfectFitSignature& sig,
                                  double target) {
  const Interval d = g_domain(sig);
  return solve_g_equals(sig, target, d.lo, d.hi);
}

Extremum g_maximum(const PerfectFitSignature& sig) {
  const Interval d = g_domain(sig);
  return grid_maximum([&](double a) { return g(a, sig); }, d.lo, d.hi);
}

Extremum g_infimum(const PerfectFitSignature& sig) {
  const Interval d = g_domain(sig);
  Extremum best =
      grid_minimum([&](double a) { return g(a, sig); }, d.lo, d.hi);
  for (double end : {d.lo, d.hi}) {
    const double v = g_end_limit(end, sig);
    if (v < best.value) best = {end, v};
  }
  return best;
}

double g_max_second_difference(const PerfectFitSignature& sig, int count) {
  const Interval d = g_domain(sig);
  const std::vector<double> xs = open_grid(d.lo, d.hi, count);
  std::vector<double> ys(xs.size());
  std::transform(xs.begin(), xs.end(), ys.begin(),
                 [&](double a) { return g(a, sig); });
  double worst = -INFINITY;
  for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
    worst = std::max(worst, ys[i - 1] - 2 * ys[i] + ys[i + 1]);
  }
  return worst;
}

std::vector<PerfectFitSignature> classification_signatures() {
  return {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {2, 0, 0, 1},
          {2, 1, 0, 0}, {1, 2, 0, 0}, {2, 0, 1, 0}, {1, 0, 2, 0},
          {1, 1, 1, 0}, {2, 2, 0, 0}, {2, 0, 2, 0}, {2, 1, 0, 1},
          {2, 1, 1, 0}, {2, 0, 1, 1}};
}

std::vector<Impossibility> declared_impossible_fits() {
  return {
      {{2, 0, 1, 0}, pi, "two triangles around a pentagon, max below 2.4"},
      {{1, 0, 2, 0}, pi, "two pentagons around a triangle, max below 1.9"},
      {{1, 1, 1, 0}, pi, "square, triangle, pentagon, max below 2.5"},
      {{2, 0, 2, 0}, pi, "triangles alternating with pentagons, max 2.75"},
      {{2, 1, 0, 1}, pi, "three triangles and a square, always too long"},
      {{1, 0, 0, 1}, 3 * pi / 5, "two supplementary triangles, at least .60817pi"},
      {{1, 0, 1, 0}, 3 * pi / 5, "triangle and pentagon, at most .436pi"},
  };
}

}  // namespace sphtile
