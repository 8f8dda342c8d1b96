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

#include "torus/core.hpp"

namespace torus {

struct HYReport {
  double p = 2.0;
  double q = 2.0;  // conjugate exponent; infinity for p = 1
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

// ||f_hat||_q <= ||f||_p for 1 <= p <= 2, q conjugate. The endpoints are the
// coefficient sup bound (p = 1) and Parseval (p = 2).
HYReport hausdorff_young_check(const TorusFunction& f, double p,
                               const TorusGrid& grid);

// Probe for p > 2: evaluates ||f_hat||_{p'} against ||f||_p. The inequality
// direction is false in general there; callers use this to exhibit a
// witness with ratio > 1, never to assert one exists.
HYReport hausdorff_young_reversed_probe(const TorusFunction& f, double p,
                                        const TorusGrid& grid);

struct DualSynthesisReport {
  TorusFunction f;
  double q = 2.0;
  double f_norm_q = 0.0;
  double coeff_norm_p = 0.0;
  double recovery_error = 0.0;  // sup |roundtrip coefficients - c|
};

// Synthesizes f = sum c_k e^{ikx} from an l^p sequence (1 < p <= 2) and
// reports ||f||_q against ||c||_p.
DualSynthesisReport dual_synthesis(const CoefficientSequence& c, double p,
                                   const TorusGrid& grid);

struct EndpointReport {
  double coeff_sup = 0.0;  // ||f_hat||_inf
  double f_l1 = 0.0;
  double coeff_l2 = 0.0;
  double f_l2 = 0.0;
};

// The two interpolation endpoints: ||f_hat||_inf <= ||f||_1 and
// ||f_hat||_2 <= ||f||_2.
EndpointReport interpolation_endpoint_report(const TorusFunction& f,
                                             const TorusGrid& grid);

}  // namespace torus
