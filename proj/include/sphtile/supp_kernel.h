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

// Supplementary pairs of tiles and the perfect-fit length functions.
//
// Two tiles are supplementary when their corner angles add to pi; they are
// "supp-same" when they also share a side length.  The length functions add
// up the sides of a run of triangles of angle alpha and supplementary tiles
// of angle pi - alpha laid along a patch side.

#ifndef SPHTILE_SUPP_KERNEL_H_
#define SPHTILE_SUPP_KERNEL_H_

#include <string>
#include <vector>

#include "sphtile/roots.h"

namespace sphtile {

enum class SuppKind { kTriTri, kTriSquare, kTriPent };

std::string to_string(SuppKind kind);

struct SuppSamePair {
  SuppKind kind;
  double triangle_angle;
  int partner_n;
  double partner_angle;
  double side;
};

// The three supp-same pairs, each solved numerically and checked against
// the grid-uniqueness scan.
std::vector<SuppSamePair> supp_same_pairs();

// Open interval of triangle angles alpha for which the triangle of angle
// alpha and the `partner_n`-gon of angle pi - alpha both exist.
struct Interval {
  double lo;
  double hi;
};
Interval supp_domain(int partner_n);

// Number of sign changes of side(3, a) - side(n, pi - a) on a grid of
// `count` points of supp_domain(n).
int supp_root_sign_changes(int partner_n, int count = 1000);

// Side sum of a supplementary triangle and square.
double f(double alpha);

// Counts of tiles glued along a side: A triangles of angle alpha, B squares,
// C pentagons and D triangles of angle pi - alpha.
struct PerfectFitSignature {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  std::string to_string() const;
  bool operator==(const PerfectFitSignature&) const = default;
};

// Open domain of alpha where every term with a nonzero count is defined.
Interval g_domain(const PerfectFitSignature& sig);

// A side(3,a) + B side(4,pi-a) + C side(5,pi-a) + D side(3,pi-a).  Throws
// std::domain_error outside g_domain (endpoints included).
double g(double alpha, const PerfectFitSignature& sig);

struct GRoot {
  double alpha;
  // True when the root is the limit of g at a degenerate end of the domain
  // (the vanishing tiles count as side 0), rather than an interior crossing.
  bool endpoint_limit;
};

// Roots of g - target on (alpha_min, alpha_max): sign changes on a 1e4 grid
// refined to 1e-12, plus degenerate-end limits matching within 1e-9.
std::vector<GRoot> solve_g_equals(const PerfectFitSignature& sig,
                                  double target, double alpha_min,
                                  double alpha_max);
std::vector<GRoot> solve_g_equals(const PerfectFitSignature& sig,
                                  double target);

Extremum g_maximum(const PerfectFitSignature& sig);
// Infimum over the open domain, including the limits at both ends.
Extremum g_infimum(const PerfectFitSignature& sig);

// Largest positive discrete second difference of g on a `count`-point
// grid; concave-down means this stays below the tolerance.
double g_max_second_difference(const PerfectFitSignature& sig,
                               int count = 10000);

// The signatures whose length function is examined in the classification,
// and the (signature, target) pairs declared to have no perfect fit.
std::vector<PerfectFitSignature> classification_signatures();
struct Impossibility {
  PerfectFitSignature sig;
  double target;
  std::string note;
};
std::vector<Impossibility> declared_impossible_fits();

}  // namespace sphtile

#endif  // SPHTILE_SUPP_KERNEL_H_
