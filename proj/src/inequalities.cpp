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

#include "torus/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "torus/analysis.hpp"
#include "torus/fft.hpp"

namespace torus {

namespace {

int coefficient_window(const TorusFunction& f, const TorusGrid& grid) {
  if (f.is_band_limited()) return f.degree();
  return grid.aliasing_threshold();
}

HYReport hy_core(const TorusFunction& f, double p, const TorusGrid& grid) {
  HYReport rep;
  rep.p = p;
  rep.q = (p == 1.0) ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
  const int w = coefficient_window(f, grid);
  const CoefficientSequence c = fourier_coefficients(f, w, grid);
  rep.lhs = lq_sequence_norm(c, rep.q);
  rep.rhs = lp_norm(f, p, grid);
  rep.ratio = (rep.rhs == 0.0) ? 0.0 : rep.lhs / rep.rhs;
  return rep;
}

}  // namespace

HYReport hausdorff_young_check(const TorusFunction& f, double p,
                               const TorusGrid& grid) {
  if (!(p >= 1.0 && p <= 2.0))
    throw std::domain_error(
        "hausdorff_young_check: p outside [1, 2]; the restriction to that "
        "range is essential");
  return hy_core(f, p, grid);
}

HYReport hausdorff_young_reversed_probe(const TorusFunction& f, double p,
                                        const TorusGrid& grid) {
  if (!(p > 2.0) || std::isinf(p))
    throw std::domain_error("hausdorff_young_reversed_probe: p must exceed 2");
  return hy_core(f, p, grid);
}

DualSynthesisReport dual_synthesis(const CoefficientSequence& c, double p,
                                   const TorusGrid& grid) {
  if (!(p > 1.0 && p <= 2.0))
    throw std::domain_error("dual_synthesis: p outside (1, 2]");
  if (2 * c.half_width() + 1 > grid.size())
    throw std::invalid_argument("dual_synthesis: window exceeds the grid");

  const double q = p / (p - 1.0);
  std::vector<std::pair<int, cplx>> terms;
  for (int k = -c.half_width(); k <= c.half_width(); ++k)
    if (c.at(k) != cplx(0.0, 0.0)) terms.emplace_back(k, c.at(k));

  DualSynthesisReport rep{TorusFunction::trig_polynomial(std::move(terms)), q,
                          0.0, 0.0, 0.0};
  rep.f_norm_q = lp_norm(rep.f, q, grid);
  rep.coeff_norm_p = lq_sequence_norm(c, p);

  // Round trip: coefficients of the synthesized function recover c.
  const CoefficientSequence back =
      fourier_coefficients(rep.f, c.half_width(), grid);
  double worst = 0.0;
  for (int k = -c.half_width(); k <= c.half_width(); ++k)
    worst = std::max(worst, std::abs(back.at(k) - c.at(k)));
  rep.recovery_error = worst;
  return rep;
}

EndpointReport interpolation_endpoint_report(const TorusFunction& f,
                                             const TorusGrid& grid) {
  const int w = coefficient_window(f, grid);
  const CoefficientSequence c = fourier_coefficients(f, w, grid);
  EndpointReport rep;
  rep.coeff_sup = lq_sequence_norm(c, std::numeric_limits<double>::infinity());
  rep.f_l1 = lp_norm(f, 1.0, grid);
  rep.coeff_l2 = lq_sequence_norm(c, 2.0);
  rep.f_l2 = lp_norm(f, 2.0, grid);
  return rep;
}

}  // namespace torus
