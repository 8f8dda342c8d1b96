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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torus/core.hpp"

namespace torus {

// Finitely supported two-sided complex sequence, the computable slice of
// l^1(Z). The window carries no zero fringe; the zero sequence has an empty
// window.
class L1Sequence {
 public:
  L1Sequence() = default;  // zero sequence

  static L1Sequence from_window(int lo, std::vector<cplx> values);
  static L1Sequence delta();        // 1 at index 0
  static L1Sequence basis(int n);   // 1 at index n

  bool is_zero() const { return v_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(v_.size()) - 1; }
  cplx at(int k) const;
  const std::vector<cplx>& values() const { return v_; }

  double l1_norm() const;
  double l2_norm() const;
  double l4_norm() const;

 private:
  int lo_ = 0;
  std::vector<cplx> v_;
};

L1Sequence l1_convolve(const L1Sequence& a, const L1Sequence& b);

// mu^{*n}; negative n uses the supplied inverse or computes one through
// wiener_inverse with default settings.
L1Sequence l1_power(const L1Sequence& mu, int n,
                    const std::optional<L1Sequence>& inverse = std::nullopt);

struct SymbolProbe {
  TorusGrid grid;
  std::vector<cplx> values;  // m(x_j) = sum mu(k) e^{ik x_j}
  double min_modulus = 0.0;  // a certificate only up to grid resolution
};

SymbolProbe symbol_probe(const L1Sequence& mu, const TorusGrid& grid);

// nu(k) = integral of e^{-ikx}/m(x) dsigma over |k| <= half_width. Requires
// the grid to oversample the window at least 8x and the symbol modulus to
// stay above 1e-6 on the grid; the residual ||mu * nu - delta||_1 must meet
// tol or the truncation is reported as insufficient.
L1Sequence wiener_inverse(const L1Sequence& mu, int half_width,
                          const TorusGrid& grid, double tol);

struct FourNormReport {
  double k = 1.0;
  double scale = 1.0;      // applied so ||f||_2 = 1
  double four_norm = 0.0;  // of the rescaled sequence
  double bound = 0.0;      // K^{-1/2}
  bool holds = false;
};

// After rescaling to ||f||_2 = 1 and checking ||f||_1 <= K:
// ||f||_4 >= K^{-1/2} (Holder with exponents 3 and 3/2, applied to
// |f|^{2/3} |f|^{4/3}).
FourNormReport four_norm_lemma_check(const L1Sequence& f, double K);

enum class PowerVerdict { characterized, unbounded, not_invertible };

struct BoundedPowersReport {
  PowerVerdict verdict = PowerVerdict::unbounded;
  int p = 0;        // characterized: the carrier index
  cplx w{0.0, 0.0};  // characterized: the unimodular mass
  std::vector<double> positive_norms;  // ||mu^{*n}||, n = 1..n_max
  std::vector<double> negative_norms;  // ||mu^{*-n}||, empty if no inverse
  int first_exceedance = 0;  // signed n of the first norm > K; 0 if none
  std::string note;
};

// Two-sided power-norm sweep. Single unimodular atoms are exactly the
// bounded case (all norms 1); a vanishing symbol leaves negative powers
// undefined; everything else is probed empirically for exceedance of K or
// growth across the window.
BoundedPowersReport bounded_powers_test(const L1Sequence& mu, int n_max,
                                        double K);

// h(rho)(j p) = rho(j) w^j for unimodular w; p = 0 collapses the image to a
// scalar multiple of delta.
L1Sequence homomorphism_apply(const L1Sequence& rho, int p, cplx w);

}  // namespace torus
