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

#include "torus/l1algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "torus/detail/numeric.hpp"
#include "torus/fft.hpp"

namespace torus {

namespace {

constexpr double kSymbolFloor = 1e-6;

cplx unit_pow(cplx w, int j) {
  cplx out(1.0, 0.0);
  if (j >= 0) {
    for (int i = 0; i < j; ++i) out *= w;
  } else {
    const cplx inv = 1.0 / w;
    for (int i = 0; i < -j; ++i) out *= inv;
  }
  return out;
}

double distance_to_delta(const L1Sequence& s) {
  detail::KahanSum acc;
  for (int k = s.lo(); k <= s.hi(); ++k)
    acc.add(std::abs(s.at(k) - (k == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0))));
  if (s.is_zero() || s.lo() > 0 || s.hi() < 0) acc.add(1.0);
  return acc.value();
}

}  // namespace

L1Sequence L1Sequence::from_window(int lo, std::vector<cplx> values) {
  std::size_t first = 0;
  while (first < values.size() && values[first] == cplx(0.0, 0.0)) ++first;
  if (first == values.size()) return L1Sequence{};
  std::size_t last = values.size();
  while (last > first && values[last - 1] == cplx(0.0, 0.0)) --last;
  L1Sequence s;
  s.lo_ = lo + static_cast<int>(first);
  s.v_.assign(values.begin() + static_cast<std::ptrdiff_t>(first),
              values.begin() + static_cast<std::ptrdiff_t>(last));
  return s;
}

L1Sequence L1Sequence::delta() { return basis(0); }

L1Sequence L1Sequence::basis(int n) {
  L1Sequence s;
  s.lo_ = n;
  s.v_ = {cplx(1.0, 0.0)};
  return s;
}

cplx L1Sequence::at(int k) const {
  const int idx = k - lo_;
  if (v_.empty() || idx < 0 || idx >= static_cast<int>(v_.size()))
    return {0.0, 0.0};
  return v_[static_cast<std::size_t>(idx)];
}

double L1Sequence::l1_norm() const {
  detail::KahanSum acc;
  for (const cplx& z : v_) acc.add(std::abs(z));
  return acc.value();
}

double L1Sequence::l2_norm() const {
  detail::KahanSum acc;
  for (const cplx& z : v_) acc.add(std::norm(z));
  return std::sqrt(acc.value());
}

double L1Sequence::l4_norm() const {
  detail::KahanSum acc;
  for (const cplx& z : v_) acc.add(std::norm(z) * std::norm(z));
  return std::pow(acc.value(), 0.25);
}

L1Sequence l1_convolve(const L1Sequence& a, const L1Sequence& b) {
  if (a.is_zero() || b.is_zero()) return L1Sequence{};
  const int lo = a.lo() + b.lo();
  const int hi = a.hi() + b.hi();
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1), cplx(0.0, 0.0));
  for (int j = lo; j <= hi; ++j) {
    detail::KahanSumC acc;
    const int k_lo = std::max(a.lo(), j - b.hi());
    const int k_hi = std::min(a.hi(), j - b.lo());
    for (int k = k_lo; k <= k_hi; ++k) acc.add(a.at(k) * b.at(j - k));
    out[static_cast<std::size_t>(j - lo)] = acc.value();
  }
  L1Sequence c = L1Sequence::from_window(lo, std::move(out));
  if (c.l1_norm() > a.l1_norm() * b.l1_norm() * (1.0 + 1e-12) + 1e-300)
    throw ContractViolation("l1_convolve: submultiplicativity failed");
  return c;
}

L1Sequence l1_power(const L1Sequence& mu, int n,
                    const std::optional<L1Sequence>& inverse) {
  if (n == 0) return L1Sequence::delta();
  L1Sequence base = mu;
  if (n < 0) {
    if (inverse) {
      if (distance_to_delta(l1_convolve(mu, *inverse)) > 1e-8)
        throw std::invalid_argument(
            "l1_power: the supplied inverse does not invert mu");
      base = *inverse;
    } else {
      const int width = mu.is_zero() ? 1 : mu.hi() - mu.lo() + 1;
      int g = 128;
      while (g < 8 * std::max(width, 129)) g *= 2;
      base = wiener_inverse(mu, 64, TorusGrid(g), 1e-8);
    }
  }
  // Repeated squaring on the exponent's binary digits.
  int e = std::abs(n);
  L1Sequence acc = L1Sequence::delta();
  L1Sequence sq = base;
  while (e > 0) {
    if (e & 1) acc = l1_convolve(acc, sq);
    e >>= 1;
    if (e > 0) sq = l1_convolve(sq, sq);
  }
  return acc;
}

SymbolProbe symbol_probe(const L1Sequence& mu, const TorusGrid& grid) {
  SymbolProbe probe{grid, {}, 0.0};
  probe.values.resize(static_cast<std::size_t>(grid.size()));
  double min_mod = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    detail::KahanSumC acc;
    for (int k = mu.lo(); k <= mu.hi(); ++k)
      acc.add(mu.at(k) * std::polar(1.0, k * x));
    probe.values[static_cast<std::size_t>(j)] = acc.value();
    min_mod = std::min(min_mod, std::abs(acc.value()));
  }
  if (mu.is_zero()) {
    std::fill(probe.values.begin(), probe.values.end(), cplx(0.0, 0.0));
    min_mod = 0.0;
  }
  probe.min_modulus = min_mod;
  return probe;
}

L1Sequence wiener_inverse(const L1Sequence& mu, int half_width,
                          const TorusGrid& grid, double tol) {
  if (half_width < 0) throw std::invalid_argument("wiener_inverse: N < 0");
  const int width = mu.is_zero() ? 1 : mu.hi() - mu.lo() + 1;
  if (grid.size() < 8 * width)
    throw std::invalid_argument(
        "wiener_inverse: grid must oversample the window at least 8x");
  if (2 * half_width + 1 > grid.size())
    throw std::invalid_argument(
        "wiener_inverse: truncation window exceeds the grid");

  const SymbolProbe probe = symbol_probe(mu, grid);
  if (probe.min_modulus < kSymbolFloor)
    throw std::domain_error(
        "wiener_inverse: symbol modulus falls below 1e-6 on the grid; no "
        "certified inverse");

  std::vector<cplx> recip(probe.values.size());
  for (std::size_t j = 0; j < recip.size(); ++j) recip[j] = 1.0 / probe.values[j];
  const CoefficientSequence c =
      fft::coefficients_from_samples(grid, recip, half_width);
  L1Sequence nu = L1Sequence::from_window(-half_width, c.values());

  if (distance_to_delta(l1_convolve(mu, nu)) > tol)
    throw ContractViolation(
        "wiener_inverse: residual exceeds tol; increase the truncation window");
  return nu;
}

FourNormReport four_norm_lemma_check(const L1Sequence& f, double K) {
  if (f.is_zero())
    throw std::invalid_argument("four_norm_lemma_check: zero sequence");
  if (!(K > 0.0)) throw std::invalid_argument("four_norm_lemma_check: K <= 0");

  FourNormReport rep;
  rep.k = K;
  rep.scale = 1.0 / f.l2_norm();
  std::vector<cplx> scaled = f.values();
  for (cplx& z : scaled) z *= rep.scale;
  const L1Sequence g = L1Sequence::from_window(f.lo(), std::move(scaled));
  if (g.l1_norm() > K * (1.0 + 1e-12))
    throw std::invalid_argument(
        "four_norm_lemma_check: rescaled l1 norm exceeds K; hypothesis fails");
  rep.four_norm = g.l4_norm();
  rep.bound = 1.0 / std::sqrt(K);
  rep.holds = rep.four_norm >= rep.bound - 1e-12;
  if (!rep.holds)
    throw ContractViolation(
        "four_norm_lemma_check: Holder chain violated; arithmetic is broken");
  return rep;
}

BoundedPowersReport bounded_powers_test(const L1Sequence& mu, int n_max,
                                        double K) {
  if (n_max < 2) throw std::invalid_argument("bounded_powers_test: n_max < 2");
  if (!(K > 0.0)) throw std::invalid_argument("bounded_powers_test: K <= 0");

  BoundedPowersReport rep;

  const bool single_atom = !mu.is_zero() && mu.lo() == mu.hi();
  const bool unimodular_atom =
      single_atom && std::abs(std::abs(mu.at(mu.lo())) - 1.0) <= 1e-12;

  if (unimodular_atom) {
    rep.verdict = PowerVerdict::characterized;
    rep.p = mu.lo();
    rep.w = mu.at(mu.lo());
    L1Sequence pos = L1Sequence::delta();
    L1Sequence neg = L1Sequence::delta();
    const L1Sequence inv = L1Sequence::from_window(-rep.p, {1.0 / rep.w});
    for (int n = 1; n <= n_max; ++n) {
      pos = l1_convolve(pos, mu);
      neg = l1_convolve(neg, inv);
      rep.positive_norms.push_back(pos.l1_norm());
      rep.negative_norms.push_back(neg.l1_norm());
    }
    rep.note = "single unimodular atom: all two-sided power norms equal 1";
    return rep;
  }

  L1Sequence pos = L1Sequence::delta();
  for (int n = 1; n <= n_max; ++n) {
    pos = l1_convolve(pos, mu);
    rep.positive_norms.push_back(pos.l1_norm());
  }

  // Invertibility gate for the negative sweep.
  const int width = mu.is_zero() ? 1 : mu.hi() - mu.lo() + 1;
  int g = 1024;
  while (g < 8 * std::max(width, 129)) g *= 2;
  const TorusGrid grid(g);
  const SymbolProbe probe = symbol_probe(mu, grid);

  if (probe.min_modulus < kSymbolFloor) {
    rep.verdict = PowerVerdict::not_invertible;
    rep.note =
        "symbol vanishes on the grid: negative powers are undefined, so the "
        "two-sided boundedness hypothesis cannot be met";
  } else {
    rep.verdict = PowerVerdict::unbounded;
    const L1Sequence inv = wiener_inverse(mu, 64, grid, 1e-6);
    L1Sequence neg = L1Sequence::delta();
    for (int n = 1; n <= n_max; ++n) {
      neg = l1_convolve(neg, inv);
      rep.negative_norms.push_back(neg.l1_norm());
    }
    double max_mod = 0.0;
    for (const cplx& z : probe.values) max_mod = std::max(max_mod, std::abs(z));
    const double rate = std::max(max_mod, 1.0 / probe.min_modulus);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "symbol modulus spans [%.6g, %.6g]; a non-monomial finite "
                  "window forces growth like %.6g^n on one side",
                  probe.min_modulus, max_mod, rate);
    rep.note = buf;
  }

  for (int n = 1; n <= n_max && rep.first_exceedance == 0; ++n) {
    if (rep.positive_norms[static_cast<std::size_t>(n - 1)] > K)
      rep.first_exceedance = n;
    else if (!rep.negative_norms.empty() &&
             rep.negative_norms[static_cast<std::size_t>(n - 1)] > K)
      rep.first_exceedance = -n;
  }
  return rep;
}

L1Sequence homomorphism_apply(const L1Sequence& rho, int p, cplx w) {
  if (std::abs(std::abs(w) - 1.0) > 1e-12)
    throw std::invalid_argument("homomorphism_apply: w must be unimodular");
  if (rho.is_zero()) return L1Sequence{};

  if (p == 0) {
    detail::KahanSumC acc;
    for (int j = rho.lo(); j <= rho.hi(); ++j)
      acc.add(rho.at(j) * unit_pow(w, j));
    return L1Sequence::from_window(0, {acc.value()});
  }

  const int lo_idx = (p > 0) ? rho.lo() * p : rho.hi() * p;
  const int hi_idx = (p > 0) ? rho.hi() * p : rho.lo() * p;
  std::vector<cplx> out(static_cast<std::size_t>(hi_idx - lo_idx + 1),
                        cplx(0.0, 0.0));
  for (int j = rho.lo(); j <= rho.hi(); ++j)
    out[static_cast<std::size_t>(j * p - lo_idx)] = rho.at(j) * unit_pow(w, j);
  return L1Sequence::from_window(lo_idx, std::move(out));
}

}  // namespace torus
