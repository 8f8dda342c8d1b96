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

#include <vector>

#include "torus/core.hpp"

namespace torus {

enum class SumMethod { cesaro, abel, raw_partial_sum };

enum class JumpFamily { fejer, poisson };

struct NormMode {
  enum class Kind { sup, lp, pointwise };
  Kind kind = Kind::sup;
  double p = 2.0;   // for lp
  double x = 0.0;   // for pointwise
  double limit = 0.0;      // pointwise reference value
  bool has_limit = false;  // false: compare against f(x)

  static NormMode sup() { return NormMode{Kind::sup, 2.0, 0.0, 0.0, false}; }
  static NormMode lp(double p) {
    return NormMode{Kind::lp, p, 0.0, 0.0, false};
  }
  static NormMode at(double x) {
    return NormMode{Kind::pointwise, 2.0, x, 0.0, false};
  }
  static NormMode at(double x, double limit) {
    return NormMode{Kind::pointwise, 2.0, x, limit, true};
  }
};

struct ConvergenceReport {
  SumMethod method = SumMethod::cesaro;
  NormMode norm;
  std::vector<double> schedule;  // n's (as doubles) or r's
  std::vector<double> errors;
};

// K_n * f as an exact trig polynomial: coefficients (1 - |k|/n) a_k(f),
// |k| < n. Requires n - 1 at or below the grid's aliasing threshold.
TorusFunction cesaro_mean(const TorusFunction& f, int n, const TorusGrid& grid);

// P_r * f: coefficients r^{|k|} a_k(f), truncated where r^{|k|} < 1e-16.
TorusFunction abel_mean(const TorusFunction& f, double r,
                        const TorusGrid& grid);

// Pointwise means, accumulated over symmetric coefficient pairs. These do
// not cap the window at the grid threshold: single-point sums need no
// synthesis.
cplx cesaro_value(const TorusFunction& f, int n, double x,
                  const TorusGrid& grid);
cplx abel_value(const TorusFunction& f, double r, double x,
                const TorusGrid& grid);
cplx partial_sum_value(const TorusFunction& f, int half_width, double x,
                       const TorusGrid& grid);

// |mean(x) - (f(x+) + f(x-))/2| along a Fejer n-schedule or Poisson
// r-schedule. One-sided limits are read off piecewise specs; continuous
// specs use f(x) on both sides; sampled specs are rejected.
ConvergenceReport jump_midpoint_check(const TorusFunction& f, double x,
                                      JumpFamily family,
                                      const std::vector<double>& schedule,
                                      const TorusGrid& grid);

// |K_n * f(x) - L| per n; the caller asserts the Lebesgue-point hypothesis.
ConvergenceReport lebesgue_point_convergence(const TorusFunction& f, double x,
                                             double limit,
                                             const std::vector<double>& n_schedule,
                                             const TorusGrid& grid);

// ||mean - f|| per schedule entry in the requested norm. Sup mode demands a
// continuous spec (piecewise-constant inputs with a genuine jump are
// rejected: uniform convergence fails for them).
ConvergenceReport norm_convergence_report(const TorusFunction& f,
                                          const NormMode& mode,
                                          SumMethod method,
                                          const std::vector<double>& schedule,
                                          const TorusGrid& grid);

}  // namespace torus
