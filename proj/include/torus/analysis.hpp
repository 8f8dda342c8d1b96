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

// Diagnostics around the partial sum f_N = sum_{|n|<=N} a_n(f) chi^n.
// defect is the residual of ||f - f_N||_2^2 = ||f||_2^2 - sum |a_n|^2,
// measured with the left side on the quadrature grid; it vanishes to
// machine precision for band-limited f and reflects quadrature bias for
// discontinuous f.
struct PartialSumReport {
  int half_width = 0;
  cplx value_at_x{0.0, 0.0};
  double norm_f_sq = 0.0;
  double diff_norm_sq = 0.0;
  double coeff_sum_sq = 0.0;
  double defect = 0.0;
};

// a_n = integral of f chi^{-n} dsigma for |n| <= half_width.
// Closed-form paths: TrigPolynomial (read off), PiecewiseConstant (exact
// endpoint formula), NamedClosedForm (geometric/Poisson series). SampledGrid
// inputs go through grid quadrature, which is exact only below the aliasing
// threshold.
CoefficientSequence fourier_coefficients(const TorusFunction& f,
                                         int half_width,
                                         const TorusGrid& grid);

// Forces the discrete-quadrature path even when a closed form exists.
CoefficientSequence fourier_coefficients_quadrature(const TorusFunction& f,
                                                    int half_width,
                                                    const TorusGrid& grid);

// True when fourier_coefficients uses an exact path for this spec.
bool has_exact_coefficient_path(const TorusFunction& f);

// S_N(x) = sum_{n=-N}^{N} c_n e^{inx}, accumulated in symmetric pairs so
// that odd-symmetric sequences cancel exactly.
cplx symmetric_partial_sum(const CoefficientSequence& c, int half_width,
                           double x);

// sum_{n=-M}^{N} c_n.
cplx asymmetric_sum(const CoefficientSequence& c, int M, int N);

PartialSumReport bessel_parseval_report(const TorusFunction& f, int half_width,
                                        const TorusGrid& grid, double x = 0.0);

// Builds the SampledGrid function with the given coefficients; requires
// grid size > 2 * half_width.
TorusFunction riesz_fischer_synthesize(const CoefficientSequence& c,
                                       const TorusGrid& grid);

// t_k = max_{k <= |n| <= cap} |a_n| for k = 1..n_max, cap = 2 * n_max.
// Nonincreasing by construction; decays to 0 in trend for integrable f.
std::vector<double> mercer_decay_check(const TorusFunction& f, int n_max,
                                       const TorusGrid& grid);

}  // namespace torus
