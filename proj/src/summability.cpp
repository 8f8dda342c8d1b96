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

#include "torus/summability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "torus/analysis.hpp"
#include "torus/detail/numeric.hpp"

namespace torus {

namespace {

// Largest window with r^w >= 1e-16; Abel tails below that are invisible at
// double precision for any summable coefficient sequence.
int abel_window(double r) {
  if (r <= 0.0) return 0;
  return static_cast<int>(std::ceil(-16.0 * std::log(10.0) / std::log(r)));
}

cplx weighted_pair_sum(const CoefficientSequence& c, int w, double x,
                       double (*weight)(int, double), double param) {
  detail::KahanSumC acc;
  acc.add(c.at(0) * weight(0, param));
  for (int k = 1; k <= w; ++k) {
    const double g = weight(k, param);
    if (g == 0.0) continue;
    const cplx e = std::polar(1.0, k * x);
    acc.add(g * (c.at(k) * e + c.at(-k) * std::conj(e)));
  }
  return acc.value();
}

double fejer_weight(int k, double n) { return 1.0 - k / n; }
double abel_weight(int k, double r) { return std::pow(r, k); }

void validate_r(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("abel mean: r outside [0, 1)");
}

// One-sided limits of f at x. For piecewise specs these are the adjacent
// piece values; continuous specs return f(x) twice.
std::pair<cplx, cplx> one_sided_limits(const TorusFunction& f, double x) {
  if (f.as<TorusFunction::SampledGrid>())
    throw std::invalid_argument(
        "one-sided limits are not defined for sampled data");
  if (auto* pc = f.as<TorusFunction::PiecewiseConstant>()) {
    const double xr = reduce_angle(x);
    // Right limit: the piece whose half-open interval contains xr.
    auto it = std::upper_bound(pc->breaks.begin(), pc->breaks.end(), xr);
    const std::size_t right = static_cast<std::size_t>(
        std::distance(pc->breaks.begin(), it)) - 1;
    // Left limit: the piece just before xr; at an interior point of a piece
    // both agree, at a breakpoint it is the previous piece (cyclically).
    std::size_t left = right;
    if (xr == pc->breaks[right])
      left = (right == 0) ? pc->values.size() - 1 : right - 1;
    return {pc->values[left], pc->values[right]};
  }
  const cplx v = evaluate(f, x);
  return {v, v};
}

}  // namespace

TorusFunction cesaro_mean(const TorusFunction& f, int n, const TorusGrid& grid) {
  if (n < 1) throw std::invalid_argument("cesaro_mean: n < 1");
  if (n - 1 > grid.aliasing_threshold())
    throw std::invalid_argument("cesaro_mean: order exceeds aliasing threshold");
  const CoefficientSequence a = fourier_coefficients(f, n - 1, grid);
  std::vector<std::pair<int, cplx>> terms;
  for (int k = -(n - 1); k <= n - 1; ++k) {
    const cplx v = a.at(k) * (1.0 - std::abs(k) / static_cast<double>(n));
    if (v != cplx(0.0, 0.0)) terms.emplace_back(k, v);
  }
  return TorusFunction::trig_polynomial(std::move(terms));
}

TorusFunction abel_mean(const TorusFunction& f, double r, const TorusGrid& grid) {
  validate_r(r);
  const int w = std::min(abel_window(r), grid.aliasing_threshold());
  const CoefficientSequence a = fourier_coefficients(f, w, grid);
  std::vector<std::pair<int, cplx>> terms;
  for (int k = -w; k <= w; ++k) {
    const cplx v = a.at(k) * std::pow(r, std::abs(k));
    if (v != cplx(0.0, 0.0)) terms.emplace_back(k, v);
  }
  return TorusFunction::trig_polynomial(std::move(terms));
}

cplx cesaro_value(const TorusFunction& f, int n, double x, const TorusGrid& grid) {
  if (n < 1) throw std::invalid_argument("cesaro_value: n < 1");
  const CoefficientSequence a = fourier_coefficients(f, n - 1, grid);
  return weighted_pair_sum(a, n - 1, x, fejer_weight, static_cast<double>(n));
}

cplx abel_value(const TorusFunction& f, double r, double x, const TorusGrid& grid) {
  validate_r(r);
  // Sampled data carries no spectrum beyond the grid threshold; exact specs
  // use the full window the weights ask for.
  int w = abel_window(r);
  if (!has_exact_coefficient_path(f)) w = std::min(w, grid.aliasing_threshold());
  const CoefficientSequence a = fourier_coefficients(f, w, grid);
  return weighted_pair_sum(a, w, x, abel_weight, r);
}

cplx partial_sum_value(const TorusFunction& f, int half_width, double x,
                       const TorusGrid& grid) {
  if (half_width < 0) throw std::invalid_argument("partial_sum_value: N < 0");
  const CoefficientSequence a = fourier_coefficients(f, half_width, grid);
  return symmetric_partial_sum(a, half_width, x);
}

ConvergenceReport jump_midpoint_check(const TorusFunction& f, double x,
                                      JumpFamily family,
                                      const std::vector<double>& schedule,
                                      const TorusGrid& grid) {
  const auto [left, right] = one_sided_limits(f, x);
  const cplx target = 0.5 * (left + right);
  ConvergenceReport rep;
  rep.method = (family == JumpFamily::fejer) ? SumMethod::cesaro : SumMethod::abel;
  rep.norm = NormMode::at(x, 0.0);
  rep.norm.has_limit = true;
  rep.schedule = schedule;
  rep.errors.reserve(schedule.size());
  for (double s : schedule) {
    cplx v;
    if (family == JumpFamily::fejer) {
      const int n = static_cast<int>(std::llround(s));
      if (n < 1 || s != static_cast<double>(n))
        throw std::invalid_argument("jump_midpoint_check: Fejer orders must be integers >= 1");
      v = cesaro_value(f, n, x, grid);
    } else {
      v = abel_value(f, s, x, grid);
    }
    rep.errors.push_back(std::abs(v - target));
  }
  return rep;
}

ConvergenceReport lebesgue_point_convergence(const TorusFunction& f, double x,
                                             double limit,
                                             const std::vector<double>& n_schedule,
                                             const TorusGrid& grid) {
  ConvergenceReport rep;
  rep.method = SumMethod::cesaro;
  rep.norm = NormMode::at(x, limit);
  rep.schedule = n_schedule;
  rep.errors.reserve(n_schedule.size());
  for (double s : n_schedule) {
    const int n = static_cast<int>(std::llround(s));
    if (n < 1 || s != static_cast<double>(n))
      throw std::invalid_argument("lebesgue_point_convergence: orders must be integers >= 1");
    rep.errors.push_back(std::abs(cesaro_value(f, n, x, grid) - limit));
  }
  return rep;
}

ConvergenceReport norm_convergence_report(const TorusFunction& f,
                                          const NormMode& mode,
                                          SumMethod method,
                                          const std::vector<double>& schedule,
                                          const TorusGrid& grid) {
  if (method == SumMethod::raw_partial_sum && mode.kind == NormMode::Kind::sup)
    throw std::invalid_argument(
        "norm_convergence_report: raw partial sums are not sup-norm convergent "
        "in general; use cesaro or abel");
  if (mode.kind == NormMode::Kind::sup) {
    if (auto* pc = f.as<TorusFunction::PiecewiseConstant>()) {
      for (std::size_t i = 0; i < pc->values.size(); ++i) {
        const cplx next = pc->values[(i + 1) % pc->values.size()];
        if (std::abs(pc->values[i] - next) > 0.0)
          throw std::invalid_argument(
              "norm_convergence_report: sup-norm convergence fails across a "
              "jump; pick an Lp mode");
      }
    }
  }

  ConvergenceReport rep;
  rep.method = method;
  rep.norm = mode;
  rep.schedule = schedule;
  rep.errors.reserve(schedule.size());

  for (double s : schedule) {
    TorusFunction mean = TorusFunction::constant(cplx(0.0, 0.0));
    switch (method) {
      case SumMethod::cesaro: {
        const int n = static_cast<int>(std::llround(s));
        if (n < 1 || s != static_cast<double>(n))
          throw std::invalid_argument("norm_convergence_report: bad Fejer order");
        mean = cesaro_mean(f, n, grid);
        break;
      }
      case SumMethod::abel:
        mean = abel_mean(f, s, grid);
        break;
      case SumMethod::raw_partial_sum: {
        const int n = static_cast<int>(std::llround(s));
        if (n < 0 || s != static_cast<double>(n))
          throw std::invalid_argument("norm_convergence_report: bad partial-sum order");
        if (n > grid.aliasing_threshold())
          throw std::invalid_argument(
              "norm_convergence_report: order exceeds aliasing threshold");
        const CoefficientSequence a = fourier_coefficients(f, n, grid);
        std::vector<std::pair<int, cplx>> terms;
        for (int k = -n; k <= n; ++k)
          if (a.at(k) != cplx(0.0, 0.0)) terms.emplace_back(k, a.at(k));
        mean = TorusFunction::trig_polynomial(std::move(terms));
        break;
      }
    }

    double err = 0.0;
    switch (mode.kind) {
      case NormMode::Kind::pointwise: {
        const cplx target =
            mode.has_limit ? cplx(mode.limit, 0.0) : evaluate(f, mode.x);
        err = std::abs(evaluate(mean, mode.x) - target);
        break;
      }
      case NormMode::Kind::sup:
      case NormMode::Kind::lp: {
        const double p = (mode.kind == NormMode::Kind::sup)
                             ? std::numeric_limits<double>::infinity()
                             : mode.p;
        // Difference in a common representation: exact piecewise path when f
        // is piecewise (mean is a trig poly; difference sampled on the grid
        // otherwise).
        if (auto* tp_f = f.as<TorusFunction::TrigPolynomial>()) {
          auto* tp_m = mean.as<TorusFunction::TrigPolynomial>();
          std::vector<std::pair<int, cplx>> terms = tp_m->terms;
          for (const auto& [n, c] : tp_f->terms) {
            bool found = false;
            for (auto& [m, d] : terms)
              if (m == n) {
                d -= c;
                found = true;
                break;
              }
            if (!found) terms.emplace_back(n, -c);
          }
          err = lp_norm(TorusFunction::trig_polynomial(std::move(terms)), p, grid);
        } else {
          const std::vector<cplx> fs = evaluate_on_grid(f, grid);
          const std::vector<cplx> ms = evaluate_on_grid(mean, grid);
          std::vector<cplx> diff(fs.size());
          for (std::size_t j = 0; j < fs.size(); ++j) diff[j] = ms[j] - fs[j];
          err = lp_norm(TorusFunction::sampled(grid, std::move(diff)), p, grid);
        }
        break;
      }
    }
    rep.errors.push_back(err);
  }
  return rep;
}

}  // namespace torus
