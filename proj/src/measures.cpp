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

#include "torus/measures.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "torus/analysis.hpp"
#include "torus/detail/numeric.hpp"
#include "torus/kernels.hpp"

namespace torus {

PositiveDefiniteSequence::PositiveDefiniteSequence(CoefficientSequence u)
    : u_(std::move(u)) {
  const cplx u0 = u_.at(0);
  if (std::abs(u0.imag()) > 1e-14 * std::max(1.0, std::abs(u0.real())) ||
      u0.real() < 0.0)
    throw std::invalid_argument(
        "PositiveDefiniteSequence: u_0 must be real and nonnegative");
  for (int n = 1; n <= u_.half_width(); ++n) {
    const cplx d = u_.at(-n) - std::conj(u_.at(n));
    if (std::abs(d) > 1e-12 * std::max(1.0, std::abs(u_.at(n))))
      throw std::invalid_argument(
          "PositiveDefiniteSequence: sequence is not Hermitian");
  }
}

CoefficientSequence stieltjes_coefficients(const TorusMeasure& mu,
                                           int half_width,
                                           const TorusGrid& grid) {
  if (half_width < 0)
    throw std::invalid_argument("stieltjes_coefficients: negative half_width");
  CoefficientSequence out = CoefficientSequence::zeros(half_width);
  for (int n = -half_width; n <= half_width; ++n) {
    detail::KahanSumC acc;
    for (const auto& atom : mu.atoms())
      acc.add(atom.mass * std::polar(1.0, -n * atom.angle));
    out.ref(n) = acc.value();
  }
  if (mu.density()) {
    const CoefficientSequence d =
        fourier_coefficients(*mu.density(), half_width, grid);
    for (int n = -half_width; n <= half_width; ++n) out.ref(n) += d.at(n);
  }
  return out;
}

double wiener_mass_estimate(const CoefficientSequence& mu_hat, int half_width) {
  if (half_width < 0 || half_width > mu_hat.half_width())
    throw std::invalid_argument(
        "wiener_mass_estimate: window exceeds available symbols");
  detail::KahanSum acc;
  for (int n = -half_width; n <= half_width; ++n)
    acc.add(std::norm(mu_hat.at(n)));
  return acc.value() / (2.0 * half_width + 1.0);
}

ContinuityVerdict continuity_test(const CoefficientSequence& mu_hat,
                                  const std::vector<int>& schedule,
                                  double tol) {
  if (schedule.size() < 2)
    throw std::invalid_argument("continuity_test: need at least two windows");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("continuity_test: schedule must increase");

  ContinuityVerdict v;
  v.trend.reserve(schedule.size());
  for (int n : schedule) v.trend.push_back(wiener_mass_estimate(mu_hat, n));

  // est(N) = sum |mass_k|^2 + c/(2N+1) + o(1/N) for atomic parts; eliminate
  // the 1/(2N+1) term with the last two entries.
  const std::size_t last = schedule.size() - 1;
  const double h1 = 1.0 / (2.0 * schedule[last - 1] + 1.0);
  const double h2 = 1.0 / (2.0 * schedule[last] + 1.0);
  const double e1 = v.trend[last - 1];
  const double e2 = v.trend[last];
  v.atom_mass_sq = e2 - h2 * (e1 - e2) / (h1 - h2);
  v.continuous = std::abs(v.atom_mass_sq) <= tol;
  return v;
}

PsdVerdict positive_definite_check(const PositiveDefiniteSequence& u, int order,
                                   double tol) {
  if (order < 0 || order > u.half_width())
    throw std::invalid_argument(
        "positive_definite_check: order exceeds available sequence");
  const int n = order + 1;
  Eigen::MatrixXcd T(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      const cplx z = u.at(row - col);
      T(row, col) = std::complex<double>(z.real(), z.imag());
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(T,
                                                         Eigen::EigenvaluesOnly);
  PsdVerdict verdict;
  verdict.min_eigenvalue = solver.eigenvalues().minCoeff();
  verdict.positive_semidefinite = verdict.min_eigenvalue >= -std::abs(tol);
  return verdict;
}

TorusFunction herglotz_reconstruct(const PositiveDefiniteSequence& u, int order,
                                   const TorusGrid& grid, double tol) {
  const PsdVerdict verdict = positive_definite_check(u, order, tol);
  if (!verdict.positive_semidefinite)
    throw std::domain_error(
        "herglotz_reconstruct: sequence is not positive semidefinite at this "
        "order");
  std::vector<std::pair<int, cplx>> terms;
  for (int k = -order; k <= order; ++k) {
    const cplx v = u.at(k) * (1.0 - std::abs(k) / (order + 1.0));
    if (v != cplx(0.0, 0.0)) terms.emplace_back(k, v);
  }
  TorusFunction sigma = TorusFunction::trig_polynomial(std::move(terms));
  // The Fejer weighting of a positive definite sequence is pointwise
  // nonnegative up to rounding; verify on the grid.
  double min_real = 0.0;
  double max_imag = 0.0;
  for (const cplx& z : evaluate_on_grid(sigma, grid)) {
    min_real = std::min(min_real, z.real());
    max_imag = std::max(max_imag, std::abs(z.imag()));
  }
  if (min_real < -1e-9 * std::max(1.0, std::abs(u.at(0))) || max_imag > 1e-9)
    throw ContractViolation(
        "herglotz_reconstruct: reconstructed density is not a nonnegative "
        "real function");
  return sigma;
}

std::vector<HarmonicExtensionProbe> poisson_extension_probe(
    const TorusMeasure& mu, const std::vector<double>& r_schedule,
    const TorusGrid& grid) {
  for (double r : r_schedule)
    if (!(r >= 0.0 && r < 1.0))
      throw std::domain_error("poisson_extension_probe: r outside [0, 1)");

  std::vector<HarmonicExtensionProbe> out;
  out.reserve(r_schedule.size());
  const bool atoms_only = !mu.density().has_value();
  for (double r : r_schedule) {
    HarmonicExtensionProbe probe;
    probe.r = r;

    TorusGrid eval_grid = grid;
    if (atoms_only) {
      // The Poisson spike has width ~ (1-r); refine so each spike carries
      // dozens of nodes regardless of the caller's grid.
      int need = grid.size();
      while (need < 40.0 / (1.0 - r) && need < (1 << 20)) need *= 2;
      eval_grid = TorusGrid(need);
    }

    std::vector<cplx> values(static_cast<std::size_t>(eval_grid.size()),
                             cplx(0.0, 0.0));
    const KernelSpec pk = KernelSpec::poisson(r);
    for (const auto& atom : mu.atoms())
      for (int j = 0; j < eval_grid.size(); ++j)
        values[static_cast<std::size_t>(j)] +=
            atom.mass * kernel_value(pk, eval_grid.node(j) - atom.angle);
    if (mu.density()) {
      const int w = std::min(
          static_cast<int>(std::ceil(-16.0 * std::log(10.0) /
                                     std::log(std::max(r, 1e-300)))),
          eval_grid.aliasing_threshold());
      const CoefficientSequence a =
          fourier_coefficients(*mu.density(), w, eval_grid);
      std::vector<std::pair<int, cplx>> terms;
      for (int k = -w; k <= w; ++k) {
        const cplx v = a.at(k) * std::pow(r, std::abs(k));
        if (v != cplx(0.0, 0.0)) terms.emplace_back(k, v);
      }
      const TorusFunction dens =
          TorusFunction::trig_polynomial(std::move(terms));
      const std::vector<cplx> ds = evaluate_on_grid(dens, eval_grid);
      for (std::size_t j = 0; j < values.size(); ++j) values[j] += ds[j];
    }

    detail::KahanSum l1;
    for (const cplx& z : values) l1.add(std::abs(z));
    probe.a_r = l1.value() / eval_grid.size();

    if (eval_grid == grid) {
      probe.values = std::move(values);
    } else {
      // Report on the caller's grid; the refined grid is a superset.
      const int stride = eval_grid.size() / grid.size();
      probe.values.resize(static_cast<std::size_t>(grid.size()));
      for (int j = 0; j < grid.size(); ++j)
        probe.values[static_cast<std::size_t>(j)] =
            values[static_cast<std::size_t>(j * stride)];
    }
    out.push_back(std::move(probe));
  }
  return out;
}

cplx harmonic_development(const CoefficientSequence& a, double r, double theta) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("harmonic_development: r outside [0, 1)");
  detail::KahanSumC acc;
  acc.add(a.at(0));
  for (int n = 1; n <= a.half_width(); ++n) {
    const double w = std::pow(r, n);
    if (w == 0.0) break;
    const cplx e = std::polar(1.0, n * theta);
    acc.add(w * (a.at(n) * e + a.at(-n) * std::conj(e)));
  }
  return acc.value();
}

}  // namespace torus
