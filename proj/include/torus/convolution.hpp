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

enum class ConvolutionPath {
  coefficient_multiplication,
  direct_quadrature,
  atomic_exact,
};

struct ConvolutionResult {
  TorusFunction function;
  ConvolutionPath path;
  // Deviation between the spectral and direct-quadrature paths when the
  // cross-check was requested; 0 otherwise.
  double cross_check_deviation = 0.0;
  bool cross_checked = false;
};

// f*g via coefficient multiplication. When either factor is band-limited of
// degree below the aliasing threshold the product is an exact trig
// polynomial; otherwise both coefficient windows are truncated at the
// threshold and the result is synthesized on the grid.
ConvolutionResult convolve_functions(const TorusFunction& f,
                                     const TorusFunction& g,
                                     const TorusGrid& grid,
                                     bool cross_check = false);

struct YoungReport {
  double p = 1.0;
  double conv_norm_p = 0.0;       // ||f*g||_p
  double f_p_times_g_1 = 0.0;     // ||f||_p ||g||_1
  double conv_norm_inf = 0.0;     // ||f*g||_inf
  double f_p_times_g_conj = 0.0;  // ||f||_p ||g||_{p'}
};

YoungReport young_bounds_report(const TorusFunction& f, const TorusFunction& g,
                                double p, const TorusGrid& grid);

// Exact translation f(. + h). Trig polynomials pick up phases, piecewise
// specs shift their breakpoints, sampled specs rotate by a whole number of
// nodes (anything else is an error), named closed forms are not closed
// under translation and are rejected.
TorusFunction translate(const TorusFunction& f, double h);

// ||f(. + h) - f||_p per schedule entry. Piecewise inputs use the exact
// simple-function path; everything else is re-evaluated pointwise on the
// grid. p = infinity is rejected: translation is not sup-norm continuous
// across a jump.
std::vector<double> continuity_in_mean(const TorusFunction& f, double p,
                                       const std::vector<double>& h_schedule,
                                       const TorusGrid& grid);

// (mu * f)(x) = sum_k mass_k f(x - theta_k) + (density * f)(x). Exact trig
// polynomial when f is band-limited.
TorusFunction convolve_measure_function(const TorusMeasure& mu,
                                        const TorusFunction& f,
                                        const TorusGrid& grid);

// Atoms convolve exactly (angles add mod 2 pi, masses multiply); any
// absolutely continuous parts are assembled spectrally on the grid. The
// Fourier-Stieltjes multiplicativity of the result is verified per call.
TorusMeasure convolve_measures(const TorusMeasure& mu, const TorusMeasure& nu,
                               const TorusGrid& grid);

}  // namespace torus
