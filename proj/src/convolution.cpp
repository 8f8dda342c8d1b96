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

#include "torus/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "torus/analysis.hpp"
#include "torus/detail/numeric.hpp"
#include "torus/fft.hpp"
#include "torus/measures.hpp"

namespace torus {

namespace {

// Node-average discretization of (f*g)(x_j): a circular convolution of the
// sample vectors after rotating g by half a period (x_j - x_k lands on the
// grid shifted by pi).
std::vector<cplx> direct_convolution_samples(const std::vector<cplx>& fs,
                                             const std::vector<cplx>& gs) {
  const int n = static_cast<int>(fs.size());
  std::vector<cplx> rot(gs.size());
  for (int m = 0; m < n; ++m) rot[m] = gs[static_cast<std::size_t>((m + n / 2) % n)];
  std::vector<cplx> F = fft::dft_forward(fs);
  std::vector<cplx> G = fft::dft_forward(rot);
  for (int m = 0; m < n; ++m) F[static_cast<std::size_t>(m)] *= G[static_cast<std::size_t>(m)];
  std::vector<cplx> h = fft::dft_backward(F);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (auto& z : h) z *= scale;
  return h;
}

TorusFunction product_trig_polynomial(const CoefficientSequence& a,
                                      const CoefficientSequence& b) {
  const int w = std::min(a.half_width(), b.half_width());
  std::vector<std::pair<int, cplx>> terms;
  for (int k = -w; k <= w; ++k) {
    const cplx v = a.at(k) * b.at(k);
    if (v != cplx(0.0, 0.0)) terms.emplace_back(k, v);
  }
  return TorusFunction::trig_polynomial(std::move(terms));
}

}  // namespace

ConvolutionResult convolve_functions(const TorusFunction& f,
                                     const TorusFunction& g,
                                     const TorusGrid& grid, bool cross_check) {
  const auto* nf = f.as<TorusFunction::NamedClosedForm>();
  const auto* ng = g.as<TorusFunction::NamedClosedForm>();
  const bool f_sampled = f.as<TorusFunction::SampledGrid>() != nullptr;
  const bool g_sampled = g.as<TorusFunction::SampledGrid>() != nullptr;

  ConvolutionResult res{TorusFunction::constant(cplx(0.0, 0.0)),
                        ConvolutionPath::coefficient_multiplication, 0.0,
                        false};

  if (nf && ng && nf->name == ng->name) {
    // Both spectra are r^{|n|} or r^n 1_{n>=0}; either way the product
    // spectrum is the same family at r = r_f r_g.
    res.function = TorusFunction::named(nf->name, nf->r * ng->r);
  } else if (f.is_band_limited() || g.is_band_limited()) {
    const int deg = f.is_band_limited() ? f.degree() : g.degree();
    if (deg > grid.aliasing_threshold())
      throw std::invalid_argument(
          "convolve_functions: band-limited factor exceeds the grid's aliasing "
          "threshold");
    CoefficientSequence a = fourier_coefficients(f, deg, grid);
    CoefficientSequence b = fourier_coefficients(g, deg, grid);
    res.function = product_trig_polynomial(a, b);
  } else if (f_sampled && g_sampled) {
    // Pure sample data: the node-average circular convolution is the natural
    // (and exactly representable) discretization.
    res.path = ConvolutionPath::direct_quadrature;
    res.function = TorusFunction::sampled(
        grid, direct_convolution_samples(evaluate_on_grid(f, grid),
                                         evaluate_on_grid(g, grid)));
  } else {
    const int w = grid.aliasing_threshold();
    CoefficientSequence a = fourier_coefficients(f, w, grid);
    CoefficientSequence b = fourier_coefficients(g, w, grid);
    CoefficientSequence c = CoefficientSequence::zeros(w);
    for (int k = -w; k <= w; ++k) c.ref(k) = a.at(k) * b.at(k);
    res.function = TorusFunction::sampled(grid, fft::synthesize_on_grid(grid, c));
  }

  if (cross_check) {
    const std::vector<cplx> direct = direct_convolution_samples(
        evaluate_on_grid(f, grid), evaluate_on_grid(g, grid));
    const std::vector<cplx> chosen = evaluate_on_grid(res.function, grid);
    double worst = 0.0;
    for (std::size_t j = 0; j < direct.size(); ++j)
      worst = std::max(worst, std::abs(direct[j] - chosen[j]));
    res.cross_check_deviation = worst;
    res.cross_checked = true;
  }
  return res;
}

YoungReport young_bounds_report(const TorusFunction& f, const TorusFunction& g,
                                double p, const TorusGrid& grid) {
  if (!(p >= 1.0) || std::isinf(p))
    throw std::domain_error("young_bounds_report: p must lie in [1, inf)");
  const double q = (p == 1.0) ? std::numeric_limits<double>::infinity()
                              : p / (p - 1.0);
  YoungReport rep;
  rep.p = p;
  const TorusFunction conv = convolve_functions(f, g, grid).function;
  rep.conv_norm_p = lp_norm(conv, p, grid);
  rep.conv_norm_inf = lp_norm(conv, std::numeric_limits<double>::infinity(), grid);
  rep.f_p_times_g_1 = lp_norm(f, p, grid) * lp_norm(g, 1.0, grid);
  rep.f_p_times_g_conj = lp_norm(f, p, grid) * lp_norm(g, q, grid);
  return rep;
}

TorusFunction translate(const TorusFunction& f, double h) {
  if (auto* tp = f.as<TorusFunction::TrigPolynomial>()) {
    std::vector<std::pair<int, cplx>> terms = tp->terms;
    for (auto& [n, c] : terms) c *= std::polar(1.0, n * h);
    return TorusFunction::trig_polynomial(std::move(terms));
  }
  if (auto* pc = f.as<TorusFunction::PiecewiseConstant>()) {
    // f(x + h) starts a piece wherever b_i - h lands; rebuild the tiling of
    // [-pi, pi) around the rotated starts.
    const std::size_t n = pc->breaks.size();
    std::vector<std::pair<double, cplx>> starts(n);
    for (std::size_t i = 0; i < n; ++i)
      starts[i] = {reduce_angle(pc->breaks[i] - h), pc->values[i]};
    std::sort(starts.begin(), starts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::tuple<double, double, cplx>> pieces;
    pieces.reserve(n + 1);
    if (starts.front().first > -pi + 1e-15) {
      // The rotated piece wrapping past pi owns [-pi, first start).
      pieces.emplace_back(-pi, starts.front().first, starts.back().second);
    } else {
      starts.front().first = -pi;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double lo = starts[i].first;
      const double hi = (i + 1 < n) ? starts[i + 1].first : pi;
      if (hi > lo) pieces.emplace_back(lo, hi, starts[i].second);
    }
    return TorusFunction::piecewise(pieces);
  }
  if (auto* sg = f.as<TorusFunction::SampledGrid>()) {
    const int n = sg->grid.size();
    const double step = two_pi / n;
    const double m_real = h / step;
    const double m_round = std::round(m_real);
    if (std::abs(m_real - m_round) > 1e-9)
      throw std::invalid_argument(
          "translate: sampled functions shift by whole nodes only");
    const long long m = static_cast<long long>(m_round);
    std::vector<cplx> rotated(sg->samples.size());
    for (int j = 0; j < n; ++j) {
      const long long k = ((j + m) % n + n) % n;
      rotated[static_cast<std::size_t>(j)] =
          sg->samples[static_cast<std::size_t>(k)];
    }
    return TorusFunction::sampled(sg->grid, std::move(rotated));
  }
  throw std::invalid_argument(
      "translate: named closed forms are not closed under translation");
}

std::vector<double> continuity_in_mean(const TorusFunction& f, double p,
                                       const std::vector<double>& h_schedule,
                                       const TorusGrid& grid) {
  if (std::isinf(p))
    throw std::invalid_argument(
        "continuity_in_mean: sup-norm translation continuity fails on jumps; "
        "p must be finite");
  if (!(p >= 1.0)) throw std::domain_error("continuity_in_mean: p < 1");

  std::vector<double> out;
  out.reserve(h_schedule.size());
  const bool named = f.as<TorusFunction::NamedClosedForm>() != nullptr;
  for (double h : h_schedule) {
    if (named) {
      std::vector<cplx> diff(static_cast<std::size_t>(grid.size()));
      for (int j = 0; j < grid.size(); ++j)
        diff[static_cast<std::size_t>(j)] =
            evaluate(f, grid.node(j) + h) - evaluate(f, grid.node(j));
      out.push_back(lp_norm(TorusFunction::sampled(grid, std::move(diff)), p, grid));
      continue;
    }
    const TorusFunction g = translate(f, h);
    if (auto* pc = f.as<TorusFunction::PiecewiseConstant>()) {
      // Difference of two piecewise-constant functions, evaluated exactly on
      // the merged break list.
      auto* qc = g.as<TorusFunction::PiecewiseConstant>();
      std::vector<double> cuts;
      cuts.reserve(pc->breaks.size() + qc->breaks.size());
      cuts.insert(cuts.end(), pc->breaks.begin(), pc->breaks.end());
      cuts.insert(cuts.end(), qc->breaks.begin(), qc->breaks.end());
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      std::vector<std::tuple<double, double, cplx>> pieces;
      for (std::size_t i = 0; i < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = (i + 1 < cuts.size()) ? cuts[i + 1] : pi;
        if (hi <= lo) continue;
        const double mid = 0.5 * (lo + hi);
        pieces.emplace_back(lo, hi, evaluate(g, mid) - evaluate(f, mid));
      }
      out.push_back(lp_norm(TorusFunction::piecewise(pieces), p, grid));
      continue;
    }
    if (auto* tp = f.as<TorusFunction::TrigPolynomial>()) {
      std::vector<std::pair<int, cplx>> terms = tp->terms;
      for (auto& [n, c] : terms) c *= std::polar(1.0, n * h) - 1.0;
      out.push_back(lp_norm(TorusFunction::trig_polynomial(std::move(terms)), p, grid));
      continue;
    }
    // Sampled: translate already validated the shift.
    const std::vector<cplx> a = evaluate_on_grid(g, grid);
    const std::vector<cplx> b = evaluate_on_grid(f, grid);
    std::vector<cplx> diff(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) diff[j] = a[j] - b[j];
    out.push_back(lp_norm(TorusFunction::sampled(grid, std::move(diff)), p, grid));
  }
  return out;
}

TorusFunction convolve_measure_function(const TorusMeasure& mu,
                                        const TorusFunction& f,
                                        const TorusGrid& grid) {
  if (f.is_band_limited() && f.degree() <= grid.aliasing_threshold()) {
    const int deg = std::max(f.degree(), 0);
    const CoefficientSequence a = fourier_coefficients(f, deg, grid);
    const CoefficientSequence m = stieltjes_coefficients(mu, deg, grid);
    return product_trig_polynomial(a, m);
  }
  // General path: atoms pointwise, density spectrally.
  std::vector<cplx> acc(static_cast<std::size_t>(grid.size()), cplx(0.0, 0.0));
  for (const auto& atom : mu.atoms())
    for (int j = 0; j < grid.size(); ++j)
      acc[static_cast<std::size_t>(j)] +=
          atom.mass * evaluate(f, grid.node(j) - atom.angle);
  if (mu.density()) {
    const std::vector<cplx> dens =
        evaluate_on_grid(convolve_functions(*mu.density(), f, grid).function, grid);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += dens[j];
  }
  return TorusFunction::sampled(grid, std::move(acc));
}

TorusMeasure convolve_measures(const TorusMeasure& mu, const TorusMeasure& nu,
                               const TorusGrid& grid) {
  std::vector<TorusMeasure::Atom> atoms;
  for (const auto& a : mu.atoms())
    for (const auto& b : nu.atoms())
      atoms.push_back({reduce_angle(a.angle + b.angle), a.mass * b.mass});

  std::optional<TorusFunction> density;
  const bool needs_ac = mu.density().has_value() || nu.density().has_value();
  if (needs_ac) {
    // Assemble the absolutely continuous part spectrally:
    //   mu_atoms * nu_dens + mu_dens * nu_atoms + mu_dens * nu_dens.
    const int w = grid.aliasing_threshold();
    CoefficientSequence c = CoefficientSequence::zeros(w);
    const CoefficientSequence mc = stieltjes_coefficients(mu, w, grid);
    const CoefficientSequence nc = stieltjes_coefficients(nu, w, grid);
    CoefficientSequence ma = CoefficientSequence::zeros(w);
    CoefficientSequence na = CoefficientSequence::zeros(w);
    for (int n = -w; n <= w; ++n) {
      detail::KahanSumC am, an;
      for (const auto& atom : mu.atoms())
        am.add(atom.mass * std::polar(1.0, -n * atom.angle));
      for (const auto& atom : nu.atoms())
        an.add(atom.mass * std::polar(1.0, -n * atom.angle));
      ma.ref(n) = am.value();
      na.ref(n) = an.value();
    }
    for (int n = -w; n <= w; ++n)
      c.ref(n) = mc.at(n) * nc.at(n) - ma.at(n) * na.at(n);
    density = TorusFunction::sampled(grid, fft::synthesize_on_grid(grid, c));
  }

  TorusMeasure out(std::move(atoms), std::move(density));

  // Fourier-Stieltjes multiplicativity is the defining contract of the
  // construction; probe a window of symbols.
  const int probe = std::min(16, grid.aliasing_threshold());
  const CoefficientSequence lhs = stieltjes_coefficients(out, probe, grid);
  const CoefficientSequence a = stieltjes_coefficients(mu, probe, grid);
  const CoefficientSequence b = stieltjes_coefficients(nu, probe, grid);
  double worst = 0.0;
  for (int n = -probe; n <= probe; ++n)
    worst = std::max(worst, std::abs(lhs.at(n) - a.at(n) * b.at(n)));
  if (worst > 1e-8)
    throw ContractViolation(
        "convolve_measures: product symbols deviate from the convolution "
        "transform beyond tolerance");
  return out;
}

}  // namespace torus
