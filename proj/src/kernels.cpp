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

#include "torus/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "torus/detail/numeric.hpp"

namespace torus {

namespace {

constexpr double kSingularSin = 1e-8;

double tailed_mass(int n) {
  const double rn = std::sqrt(static_cast<double>(n));
  return (n - rn) / n + rn / n;
}

// integral of e_n over [delta, pi] divided by pi (the tail on delta<=|x|<=pi
// against normalized measure, using evenness).
double tailed_tail_mass(int n, double delta) {
  const double rn = std::sqrt(static_cast<double>(n));
  const double inner = 1.0 / n;      // bump (0, 1/n), height pi (n - sqrt n)
  const double outer = pi - 1.0 / n; // bump (pi - 1/n, pi), height pi sqrt n
  double integral = 0.0;
  if (delta < inner) integral += pi * (n - rn) * (inner - delta);
  integral += pi * rn * (pi - std::max(delta, outer));
  return integral / pi;
}

}  // namespace

KernelSpec KernelSpec::dirichlet(int n) {
  if (n < 0) throw std::invalid_argument("dirichlet kernel: n < 0");
  return {Family::dirichlet, n, 0.0};
}

KernelSpec KernelSpec::fejer(int n) {
  if (n < 1) throw std::invalid_argument("fejer kernel: n < 1");
  return {Family::fejer, n, 0.0};
}

KernelSpec KernelSpec::poisson(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("poisson kernel: r outside [0, 1)");
  return {Family::poisson, 0, r};
}

KernelSpec KernelSpec::tailed(int n) {
  if (n < 1) throw std::invalid_argument("tailed kernel: n < 1");
  return {Family::tailed_identity, n, 0.0};
}

std::string KernelSpec::name() const {
  switch (family) {
    case Family::dirichlet: return "dirichlet(" + std::to_string(n) + ")";
    case Family::fejer: return "fejer(" + std::to_string(n) + ")";
    case Family::poisson: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "poisson(%.6g)", r);
      return buf;
    }
    case Family::tailed_identity: return "tailed(" + std::to_string(n) + ")";
  }
  return "?";
}

double kernel_value(const KernelSpec& k, double x) {
  x = reduce_angle(x);
  switch (k.family) {
    case KernelSpec::Family::dirichlet: {
      const double s = std::sin(0.5 * x);
      if (std::abs(s) < kSingularSin) return 2.0 * k.n + 1.0;
      return std::sin((k.n + 0.5) * x) / s;
    }
    case KernelSpec::Family::fejer: {
      const double s = std::sin(0.5 * x);
      if (std::abs(s) < kSingularSin) return static_cast<double>(k.n);
      const double t = std::sin(0.5 * k.n * x) / s;
      return t * t / k.n;
    }
    case KernelSpec::Family::poisson: {
      const double r = k.r;
      return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(x) + r * r);
    }
    case KernelSpec::Family::tailed_identity: {
      const double ax = std::abs(x);
      const double rn = std::sqrt(static_cast<double>(k.n));
      if (ax < 1.0 / k.n) return pi * (k.n - rn);
      if (ax >= pi - 1.0 / k.n) return pi * rn;
      return 0.0;
    }
  }
  return 0.0;
}

double fejer_majorant(int n, double x) {
  x = reduce_angle(x);
  return 2.0 * pi * pi * n / (1.0 + static_cast<double>(n) * n * x * x);
}

double dirichlet_antiderivative(int n, double x) {
  detail::KahanSum acc;
  acc.add(x);
  for (int k = 1; k <= n; ++k) acc.add(2.0 * std::sin(k * x) / k);
  return acc.value();
}

double fejer_antiderivative(int n, double u) {
  detail::KahanSum acc;
  acc.add(u);
  for (int k = 1; k <= n - 1; ++k)
    acc.add(2.0 * (1.0 - static_cast<double>(k) / n) * std::sin(k * u) / k);
  return acc.value();
}

double poisson_antiderivative(double r, double x) {
  const double y = std::remainder(x, two_pi);
  const double k = std::round((x - y) / two_pi);
  double branch;
  if (std::abs(std::abs(y) - pi) < 1e-300) {
    branch = std::copysign(pi, y);
  } else {
    branch = 2.0 * std::atan(((1.0 + r) / (1.0 - r)) * std::tan(0.5 * y));
  }
  return branch + two_pi * k;
}

double lebesgue_constant(int n) {
  if (n < 0) throw std::invalid_argument("lebesgue_constant: n < 0");
  // Zeros of D_n on (0, pi) sit at z_k = k pi / (n + 1/2); D_n keeps one sign
  // per cell, so |D_n| integrates cell-by-cell from the exact antiderivative.
  const double step = pi / (n + 0.5);
  detail::KahanSum acc;
  double prev_z = 0.0;
  double prev_F = 0.0;
  for (int k = 1; k <= n + 1; ++k) {
    const double z = std::min(k * step, pi);
    const double F = dirichlet_antiderivative(n, z);
    acc.add(std::abs(F - prev_F));
    prev_z = z;
    prev_F = F;
    if (prev_z >= pi) break;
  }
  return acc.value() / pi;
}

std::vector<ApproximateIdentityReport> approximate_identity_report(
    const std::vector<KernelSpec>& family, const std::vector<double>& deltas,
    const TorusGrid& grid) {
  for (double d : deltas)
    if (!(d > 0.0 && d < pi))
      throw std::invalid_argument("approximate_identity_report: delta outside (0, pi)");

  std::vector<ApproximateIdentityReport> out;
  out.reserve(family.size());
  for (const auto& spec : family) {
    ApproximateIdentityReport rep;
    rep.spec = spec;

    double min_value = kernel_value(spec, grid.node(0));
    for (int j = 1; j < grid.size(); ++j)
      min_value = std::min(min_value, kernel_value(spec, grid.node(j)));
    rep.nonnegativity_violation = std::max(0.0, -min_value);

    // Mass against dsigma is 1 by construction for every family; the defect
    // is taken from the exact representation rather than grid quadrature so
    // discontinuous members do not pick up grid misassignment error.
    switch (spec.family) {
      case KernelSpec::Family::dirichlet:
      case KernelSpec::Family::fejer:
      case KernelSpec::Family::poisson:
        rep.mass_defect = 0.0;
        break;
      case KernelSpec::Family::tailed_identity:
        rep.mass_defect = std::abs(tailed_mass(spec.n) - 1.0);
        break;
    }

    rep.tail_mass.reserve(deltas.size());
    for (double d : deltas) {
      double tail = 0.0;
      switch (spec.family) {
        case KernelSpec::Family::dirichlet: {
          // Per-cell |dF| restricted to [d, pi].
          const double step = pi / (spec.n + 0.5);
          detail::KahanSum acc;
          double lo = d;
          double F_lo = dirichlet_antiderivative(spec.n, lo);
          const int k_first = static_cast<int>(std::floor(d / step)) + 1;
          for (int k = k_first;; ++k) {
            const double hi = std::min(k * step, pi);
            const double F_hi = dirichlet_antiderivative(spec.n, hi);
            acc.add(std::abs(F_hi - F_lo));
            if (hi >= pi) break;
            lo = hi;
            F_lo = F_hi;
          }
          tail = acc.value() / pi;
          break;
        }
        case KernelSpec::Family::fejer:
          tail = (fejer_antiderivative(spec.n, pi) -
                  fejer_antiderivative(spec.n, d)) / pi;
          break;
        case KernelSpec::Family::poisson:
          tail = (poisson_antiderivative(spec.r, pi) -
                  poisson_antiderivative(spec.r, d)) / pi;
          break;
        case KernelSpec::Family::tailed_identity:
          tail = tailed_tail_mass(spec.n, d);
          break;
      }
      rep.tail_mass.push_back(tail);
    }

    switch (spec.family) {
      case KernelSpec::Family::dirichlet:
        rep.l1_norm = lebesgue_constant(spec.n);
        break;
      case KernelSpec::Family::fejer:
      case KernelSpec::Family::poisson:
        rep.l1_norm = 1.0;
        break;
      case KernelSpec::Family::tailed_identity:
        rep.l1_norm = tailed_mass(spec.n);
        break;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

double tailed_f_value(double x) {
  const double ax = std::abs(reduce_angle(x));
  if (ax < pi - 1.0) return 0.0;
  const double m = std::floor(1.0 / (pi - ax));
  return std::sqrt(m);
}

TailedIdentityReport tailed_identity_counterexample(int n) {
  if (n < 1) throw std::invalid_argument("tailed_identity_counterexample: n < 1");
  TailedIdentityReport rep;
  rep.n = n;
  rep.kernel_mass = tailed_mass(n);

  // pairing = sqrt(n) sum_{m>=n} 1/(sqrt(m)(m+1)); direct Kahan sum to M,
  // then an Euler-Maclaurin tail with integral pi - 2 atan(sqrt(M)).
  const auto tail_sum_from = [](long long start) {
    const long long M = start + 2'000'000;
    detail::KahanSum acc;
    for (long long m = start; m < M; ++m) {
      const double md = static_cast<double>(m);
      acc.add(1.0 / (std::sqrt(md) * (md + 1.0)));
    }
    const double Md = static_cast<double>(M);
    const double gM = 1.0 / (std::sqrt(Md) * (Md + 1.0));
    acc.add(pi - 2.0 * std::atan(std::sqrt(Md)));
    acc.add(0.5 * gM);
    return acc.value();
  };
  rep.pairing_with_f = std::sqrt(static_cast<double>(n)) * tail_sum_from(n);
  rep.f_mass = tail_sum_from(1) / pi;
  return rep;
}

double tailed_f_fejer_value(int n, double x, int m_max) {
  if (n < 1) throw std::invalid_argument("tailed_f_fejer_value: n < 1");
  if (m_max < 2) throw std::invalid_argument("tailed_f_fejer_value: m_max < 2");
  x = reduce_angle(x);
  if (std::abs(x) > pi - 0.2)
    throw std::invalid_argument(
        "tailed_f_fejer_value: x must stay 0.2 away from the tail bumps");
  // (K_n * f)(x) = sum over steps of f of sqrt(m)/(2pi) * integral of K_n
  // over the shifted step, each integral an exact antiderivative difference.
  detail::KahanSum acc;
  for (int m = 1; m <= m_max; ++m) {
    const double a = pi - 1.0 / m;
    const double b = pi - 1.0 / (m + 1.0);
    const double w = std::sqrt(static_cast<double>(m));
    acc.add(w * (fejer_antiderivative(n, x - a) - fejer_antiderivative(n, x - b)));
    acc.add(w * (fejer_antiderivative(n, x + b) - fejer_antiderivative(n, x + a)));
  }
  return acc.value() / two_pi;
}

double kernel_relation_check(int n, const TorusGrid& grid) {
  if (n < 0) throw std::invalid_argument("kernel_relation_check: n < 0");
  const KernelSpec fe = KernelSpec::fejer(2 * n + 1);
  const KernelSpec di = KernelSpec::dirichlet(n);
  double worst = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    const double d = kernel_value(di, x);
    const double lhs = kernel_value(fe, x);
    worst = std::max(worst, std::abs(lhs - d * d / (2.0 * n + 1.0)));
  }
  return worst;
}

TorusFunction kernel_function(const KernelSpec& k) {
  switch (k.family) {
    case KernelSpec::Family::dirichlet: {
      std::vector<std::pair<int, cplx>> terms;
      for (int j = -k.n; j <= k.n; ++j) terms.emplace_back(j, cplx(1.0, 0.0));
      return TorusFunction::trig_polynomial(std::move(terms));
    }
    case KernelSpec::Family::fejer: {
      std::vector<std::pair<int, cplx>> terms;
      for (int j = -(k.n - 1); j <= k.n - 1; ++j)
        terms.emplace_back(j, cplx(1.0 - std::abs(j) / static_cast<double>(k.n), 0.0));
      return TorusFunction::trig_polynomial(std::move(terms));
    }
    case KernelSpec::Family::poisson:
      return TorusFunction::named("poisson", k.r);
    case KernelSpec::Family::tailed_identity:
      throw std::invalid_argument(
          "kernel_function: the tailed family has no closed-form function object");
  }
  throw std::invalid_argument("kernel_function: unknown family");
}

}  // namespace torus
