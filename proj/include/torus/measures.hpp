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

// A Hermitian two-sided sequence u_n, candidate moment sequence of a
// positive measure. Construction checks u_{-n} = conj(u_n) and that u_0 is
// real and nonnegative; full positive definiteness is the job of
// positive_definite_check.
class PositiveDefiniteSequence {
 public:
  explicit PositiveDefiniteSequence(CoefficientSequence u);

  const CoefficientSequence& sequence() const { return u_; }
  int half_width() const { return u_.half_width(); }
  cplx at(int n) const { return u_.at(n); }

 private:
  CoefficientSequence u_;
};

struct PsdVerdict {
  bool positive_semidefinite = false;
  double min_eigenvalue = 0.0;
};

struct ContinuityVerdict {
  bool continuous = false;
  // Bias-corrected limit of the Wiener averages: the raw estimate at window
  // N carries an exact c/(2N+1) term for finitely many atoms, so two-point
  // Richardson extrapolation in h = 1/(2N+1) removes it.
  double atom_mass_sq = 0.0;
  std::vector<double> trend;  // raw estimates along the schedule
};

struct HarmonicExtensionProbe {
  double r = 0.0;
  double a_r = 0.0;  // integral of |P_r * mu| dsigma
  std::vector<cplx> values;
};

// mu_hat(n) = sum_k mass_k e^{-in theta_k} + a_n(density).
CoefficientSequence stieltjes_coefficients(const TorusMeasure& mu,
                                           int half_width,
                                           const TorusGrid& grid);

// (1/(2N+1)) sum_{|n|<=N} |mu_hat(n)|^2.
double wiener_mass_estimate(const CoefficientSequence& mu_hat, int half_width);

ContinuityVerdict continuity_test(const CoefficientSequence& mu_hat,
                                  const std::vector<int>& schedule,
                                  double tol);

// Smallest eigenvalue of the (N+1) x (N+1) Toeplitz section T[m][n] = u_{m-n}.
PsdVerdict positive_definite_check(const PositiveDefiniteSequence& u, int order,
                                   double tol = 1e-10);

// The Fejer-weighted density sigma_N(x) = sum_{|k|<=N} (1-|k|/(N+1)) u_k
// e^{ikx}: a nonnegative trig polynomial whenever u is positive definite,
// with mass exactly u_0.
TorusFunction herglotz_reconstruct(const PositiveDefiniteSequence& u, int order,
                                   const TorusGrid& grid, double tol = 1e-10);

// P_r * mu per schedule entry, with A_r = ||P_r * mu||_1. Purely atomic
// measures integrate |P_r * mu| on an internally refined grid (the closed
// form is cheap and the spike width shrinks like 1-r); measures with a
// density use the caller's grid, adequate for r <= 0.99.
std::vector<HarmonicExtensionProbe> poisson_extension_probe(
    const TorusMeasure& mu, const std::vector<double>& r_schedule,
    const TorusGrid& grid);

// F(r e^{i theta}) = sum a_n r^{|n|} e^{in theta}.
cplx harmonic_development(const CoefficientSequence& a, double r, double theta);

}  // namespace torus
