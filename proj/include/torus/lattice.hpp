// Copyright 2026 The torus-harmonics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "torus/core.hpp"

namespace torus {

// Origin-symmetric convex region given by an indicator, a bounding box, and
// an area that is exact for the named factories and Monte Carlo estimated
// otherwise.
struct ConvexBody2D {
  std::function<bool(double, double)> indicator;
  double bbox_x = 0.0;
  double bbox_y = 0.0;
  double area = 0.0;
  double area_std_error = 0.0;
  bool area_exact = false;

  // |x| < hx, |y| < hy (closed: <=).
  static ConvexBody2D rectangle(double hx, double hy, bool closed = false);
  // (x/a)^2 + (y/b)^2 < 1 (closed: <=).
  static ConvexBody2D ellipse(double a, double b, bool closed = false);
  // {alpha v1 + beta v2 : |alpha|, |beta| <= 1} for v1 = (p, q), v2 = (s, t).
  static ConvexBody2D parallelogram(double p, double q, double s, double t,
                                    bool closed = true);
  // |a x + b y| <= s and |c x + d y| <= t (always closed).
  static ConvexBody2D linear_form_body(double a, double b, double c, double d,
                                       double s, double t);
  // Convex origin-symmetric polygon from CCW vertices; closed indicator.
  static ConvexBody2D polygon(const std::vector<std::pair<double, double>>& v);
};

// Splittable counter-based sampling; reproducible for a fixed seed
// regardless of evaluation order. Returns (estimate, standard error).
std::pair<double, double> monte_carlo_area(const ConvexBody2D& body,
                                           std::size_t samples,
                                           std::uint64_t seed);

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The sup-norm shell of radius r (r >= 1), ordered counterclockwise
// starting at (r, 0). This is the enumeration order of all searches.
std::vector<std::pair<int, int>> lattice_shell(int r);

// First nonzero lattice point inside the body, scanning shells outward.
// Throws ContractViolation if a hit lies outside the declared bbox.
std::optional<std::pair<int, int>> minkowski_search(const ConvexBody2D& body,
                                                    int radius_bound);

// Same search; named separately because the area-4 boundary case needs a
// closed indicator to be meaningful.
std::optional<std::pair<int, int>> boundary_minkowski_search(
    const ConvexBody2D& body, int radius_bound);

// Nonzero (m, n) with |am + bn| <= k and |cm + dn| <= 1/k, for
// |ad - bc| <= 1. radius_bound 0 derives a bound from the parallelogram's
// corners. Throws SearchExhausted when no point lies within the bound
// (degenerate determinants can push the point arbitrarily far out).
std::pair<int, int> parallelogram_pair(double a, double b, double c, double d,
                                       double k, int radius_bound = 0);

struct DiophantineResult {
  std::vector<std::pair<long long, long long>> pairs;  // (m, n), m increasing
  bool exact_hit = false;  // a is rational and the last pair is exact
};

// Continued-fraction convergents n/m of a with |a - n/m| <= 1/m^2, skipping
// the integer part. Each returned pair is re-validated against the bound.
DiophantineResult diophantine_approx(double a, int count);

// One pair (m, n) with m <= Q and |m a - n| <= 1/Q, by the pigeonhole
// argument on fractional parts. Cross-check mode for diophantine_approx.
std::pair<long long, long long> diophantine_pigeonhole(double a, long long Q);

// Samples on the unit square, nodes (j/N, k/N), row-major.
struct Torus2Function {
  int size = 0;
  std::vector<cplx> values;

  static Torus2Function from_samples(int size, std::vector<cplx> values);
};

// |sum_{|m|,|n| <= degree} |a_{m,n}|^2 - mean |f|^2| via a 2-D transform;
// near zero for band-limited f with degree below size/2.
double parseval_2d_check(const Torus2Function& f, int degree);

}  // namespace torus
