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

#include "torus/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "torus/detail/numeric.hpp"
#include "torus/fft.hpp"

namespace torus {

namespace {

// a_n of a single piece [a, b) with value v: v (e^{-ina} - e^{-inb}) / (2 pi i n).
cplx piece_coefficient(double a, double b, cplx v, int n) {
  if (n == 0) return v * (b - a) / two_pi;
  const cplx num = std::polar(1.0, -n * a) - std::polar(1.0, -n * b);
  return v * num / (cplx(0.0, 1.0) * (two_pi * n));
}

CoefficientSequence closed_form_coefficients(const TorusFunction& f,
                                             int half_width) {
  CoefficientSequence c = CoefficientSequence::zeros(half_width);
  if (auto* tp = f.as<TorusFunction::TrigPolynomial>()) {
    for (const auto& [n, v] : tp->terms)
      if (std::abs(n) <= half_width) c.ref(n) = v;
    return c;
  }
  if (auto* pc = f.as<TorusFunction::PiecewiseConstant>()) {
    for (int n = -half_width; n <= half_width; ++n) {
      detail::KahanSumC acc;
      for (std::size_t i = 0; i < pc->breaks.size(); ++i) {
        double hi = (i + 1 < pc->breaks.size()) ? pc->breaks[i + 1] : pi;
        acc.add(piece_coefficient(pc->breaks[i], hi, pc->values[i], n));
      }
      c.ref(n) = acc.value();
    }
    return c;
  }
  auto* nf = f.as<TorusFunction::NamedClosedForm>();
  if (nf->name == "geometric_pole") {
    for (int n = 0; n <= half_width; ++n) c.ref(n) = std::pow(nf->r, n);
  } else {  // poisson
    for (int n = -half_width; n <= half_width; ++n)
      c.ref(n) = std::pow(nf->r, std::abs(n));
  }
  return c;
}

}  // namespace

bool has_exact_coefficient_path(const TorusFunction& f) {
  return f.as<TorusFunction::SampledGrid>() == nullptr;
}

CoefficientSequence fourier_coefficients_quadrature(const TorusFunction& f,
                                                    int half_width,
                                                    const TorusGrid& grid) {
  return fft::coefficients_from_samples(grid, evaluate_on_grid(f, grid),
                                        half_width);
}

CoefficientSequence fourier_coefficients(const TorusFunction& f,
                                         int half_width,
                                         const TorusGrid& grid) {
  if (half_width < 0)
    throw std::invalid_argument("fourier_coefficients: negative half_width");
  if (has_exact_coefficient_path(f))
    return closed_form_coefficients(f, half_width);
  return fourier_coefficients_quadrature(f, half_width, grid);
}

cplx symmetric_partial_sum(const CoefficientSequence& c, int half_width,
                           double x) {
  if (half_width < 0 || half_width > c.half_width())
    throw std::invalid_argument(
        "symmetric_partial_sum: order exceeds available coefficients");
  detail::KahanSumC acc;
  acc.add(c.at(0));
  for (int n = 1; n <= half_width; ++n) {
    const cplx e = std::polar(1.0, n * x);
    acc.add(c.at(n) * e + c.at(-n) * std::conj(e));
  }
  return acc.value();
}

cplx asymmetric_sum(const CoefficientSequence& c, int M, int N) {
  if (M < 0 || N < 0 || M > c.half_width() || N > c.half_width())
    throw std::invalid_argument(
        "asymmetric_sum: range exceeds available coefficients");
  detail::KahanSumC acc;
  for (int n = -M; n <= N; ++n) acc.add(c.at(n));
  return acc.value();
}

PartialSumReport bessel_parseval_report(const TorusFunction& f, int half_width,
                                        const TorusGrid& grid, double x) {
  CoefficientSequence c = fourier_coefficients(f, half_width, grid);
  PartialSumReport rep;
  rep.half_width = half_width;
  rep.value_at_x = symmetric_partial_sum(c, half_width, x);

  detail::KahanSum sumsq;
  for (const auto& z : c.values()) sumsq.add(std::norm(z));
  rep.coeff_sum_sq = sumsq.value();

  rep.norm_f_sq = std::pow(lp_norm(f, 2.0, grid), 2);

  const std::vector<cplx> fs = evaluate_on_grid(f, grid);
  const std::vector<cplx> ps =
      fft::synthesize_on_grid(grid, c);
  detail::KahanSum diff;
  for (std::size_t j = 0; j < fs.size(); ++j) diff.add(std::norm(fs[j] - ps[j]));
  rep.diff_norm_sq = diff.value() / static_cast<double>(fs.size());

  rep.defect = rep.diff_norm_sq - (rep.norm_f_sq - rep.coeff_sum_sq);
  return rep;
}

TorusFunction riesz_fischer_synthesize(const CoefficientSequence& c,
                                       const TorusGrid& grid) {
  if (2 * c.half_width() + 1 > grid.size())
    throw std::invalid_argument("riesz_fischer_synthesize: aliasing");
  return TorusFunction::sampled(grid, fft::synthesize_on_grid(grid, c));
}

std::vector<double> mercer_decay_check(const TorusFunction& f, int n_max,
                                       const TorusGrid& grid) {
  if (n_max < 8) throw std::invalid_argument("mercer_decay_check: n_max < 8");
  int cap = 2 * n_max;
  if (!has_exact_coefficient_path(f))
    cap = std::min(cap, grid.aliasing_threshold());
  CoefficientSequence c = fourier_coefficients(f, cap, grid);
  // Suffix maxima over the symmetric tail, k = cap..1.
  std::vector<double> suffix(static_cast<std::size_t>(cap) + 1, 0.0);
  for (int k = cap; k >= 1; --k) {
    double here = std::max(std::abs(c.at(k)), std::abs(c.at(-k)));
    suffix[static_cast<std::size_t>(k)] =
        (k == cap) ? here : std::max(here, suffix[static_cast<std::size_t>(k) + 1]);
  }
  return std::vector<double>(suffix.begin() + 1,
                             suffix.begin() + 1 + n_max);
}

}  // namespace torus
