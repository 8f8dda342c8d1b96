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

#include <string>
#include <vector>

#include "torus/core.hpp"

namespace torus {

// Summability kernels plus the tailed near-identity used as the
// Lebesgue-point counterexample.
struct KernelSpec {
  enum class Family { dirichlet, fejer, poisson, tailed_identity };

  Family family = Family::dirichlet;
  int n = 0;     // dirichlet: degree >= 0; fejer/tailed: order >= 1
  double r = 0.0;  // poisson: 0 < r < 1

  static KernelSpec dirichlet(int n);
  static KernelSpec fejer(int n);
  static KernelSpec poisson(double r);
  static KernelSpec tailed(int n);

  std::string name() const;
};

struct ApproximateIdentityReport {
  KernelSpec spec;
  double nonnegativity_violation = 0.0;  // max(0, -min over grid)
  double mass_defect = 0.0;              // |integral - 1|
  std::vector<double> tail_mass;         // one entry per requested delta
  double l1_norm = 0.0;
};

struct TailedIdentityReport {
  int n = 0;
  double kernel_mass = 0.0;     // integral of e_n, exactly 1 from the pieces
  double pairing_with_f = 0.0;  // integral of e_n * f, always >= 1
  double f_mass = 0.0;          // integral of f (finite: f is integrable)
};

// Closed-form evaluation with the removable singularity at sin(x/2) = 0
// patched by the limit values D_n(0) = 2n+1, K_n(0) = n.
double kernel_value(const KernelSpec& k, double x);

// Bell-shaped majorant 2 pi^2 n / (1 + n^2 x^2) of the Fejer kernel.
double fejer_majorant(int n, double x);

// Global antiderivative of D_n: x + 2 sum_{k=1}^{n} sin(kx)/k.
double dirichlet_antiderivative(int n, double x);

// Global antiderivative of K_n: u + 2 sum_{k=1}^{n-1} (1-k/n) sin(ku)/k.
double fejer_antiderivative(int n, double u);

// Antiderivative of the Poisson kernel on (-pi, pi), extended continuously:
// integral_0^x P_r = 2 atan(((1+r)/(1-r)) tan(x/2)) per branch.
double poisson_antiderivative(double r, double x);

// L_n = integral of |D_n| dsigma, summed per sign-change cell from the exact
// antiderivative, so each cell is error-free up to rounding.
double lebesgue_constant(int n);

std::vector<ApproximateIdentityReport> approximate_identity_report(
    const std::vector<KernelSpec>& family, const std::vector<double>& deltas,
    const TorusGrid& grid);

// Sharpness witness for the approximate-identity hypotheses: e_n pairs
// against an unbounded integrable f with value >= 1 for every n, even
// though f is continuous (and zero) at points where the Fejer means of f
// do converge.
TailedIdentityReport tailed_identity_counterexample(int n);

// The unbounded comparison function: sqrt(m) on [pi - 1/m, pi - 1/(m+1)),
// even, zero on (-(pi-1), pi-1).
double tailed_f_value(double x);

// K_n * f at x for the tailed comparison function, assembled from exact
// antiderivative differences over the first m_max pieces. Requires x to be
// at least 0.2 away from +-pi so the truncated sliver is controlled.
double tailed_f_fejer_value(int n, double x, int m_max = 3000);

// max over grid nodes of |K_{2n+1}(x) - D_n(x)^2 / (2n+1)|.
double kernel_relation_check(int n, const TorusGrid& grid);

// The kernel as a TorusFunction: exact trig polynomial for Dirichlet/Fejer,
// the named closed form for Poisson. The tailed family is not representable.
TorusFunction kernel_function(const KernelSpec& k);

}  // namespace torus
