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

#include "torus/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "torus/detail/numeric.hpp"
#include "torus/fft.hpp"

namespace torus {

double reduce_angle(double x) {
  double r = std::remainder(x, two_pi);  // lands in [-pi, pi]
  if (r >= pi) r -= two_pi;
  if (r < -pi) r += two_pi;
  return r;
}

TorusGrid::TorusGrid(int size) : size_(size) {
  if (size < 4 || size % 2 != 0)
    throw std::invalid_argument("TorusGrid: size must be even and >= 4");
}

double TorusGrid::node(int j) const {
  return (2.0 * j - size_) * pi / size_;
}

CoefficientSequence::CoefficientSequence(int half_width,
                                         std::vector<cplx> values)
    : half_width_(half_width), values_(std::move(values)) {
  if (half_width < 0)
    throw std::invalid_argument("CoefficientSequence: negative half_width");
  if (values_.size() != static_cast<std::size_t>(2 * half_width + 1))
    throw std::invalid_argument(
        "CoefficientSequence: need 2*half_width+1 values");
}

CoefficientSequence CoefficientSequence::zeros(int half_width) {
  return CoefficientSequence(half_width,
                             std::vector<cplx>(2 * half_width + 1));
}

cplx CoefficientSequence::at(int n) const {
  if (std::abs(n) > half_width_) return {0.0, 0.0};
  return values_[static_cast<std::size_t>(n + half_width_)];
}

cplx& CoefficientSequence::ref(int n) {
  if (std::abs(n) > half_width_)
    throw std::out_of_range("CoefficientSequence: index outside window");
  return values_[static_cast<std::size_t>(n + half_width_)];
}

namespace {

void validate(const TorusFunction::Spec& spec) {
  if (auto* pc = std::get_if<TorusFunction::PiecewiseConstant>(&spec)) {
    if (pc->breaks.empty() || pc->breaks.size() != pc->values.size())
      throw std::invalid_argument("PiecewiseConstant: breaks/values mismatch");
    if (pc->breaks.front() != -pi)
      throw std::invalid_argument(
          "PiecewiseConstant: first breakpoint must be -pi");
    for (std::size_t i = 0; i + 1 < pc->breaks.size(); ++i)
      if (!(pc->breaks[i] < pc->breaks[i + 1]))
        throw std::invalid_argument(
            "PiecewiseConstant: breakpoints must be strictly increasing");
    if (pc->breaks.back() >= pi)
      throw std::invalid_argument(
          "PiecewiseConstant: breakpoints must lie in [-pi, pi)");
  } else if (auto* nf = std::get_if<TorusFunction::NamedClosedForm>(&spec)) {
    if (nf->name != "geometric_pole" && nf->name != "poisson")
      throw std::invalid_argument("NamedClosedForm: unknown form '" +
                                  nf->name + "'");
    if (!(nf->r >= 0.0 && nf->r < 1.0))
      throw std::domain_error("NamedClosedForm: parameter requires 0 <= r < 1");
  } else if (auto* sg = std::get_if<TorusFunction::SampledGrid>(&spec)) {
    if (sg->samples.size() != static_cast<std::size_t>(sg->grid.size()))
      throw std::invalid_argument("SampledGrid: sample count != grid size");
  }
}

}  // namespace

TorusFunction::TorusFunction(Spec spec) : spec_(std::move(spec)) {
  validate(spec_);
}

TorusFunction TorusFunction::trig_polynomial(
    std::vector<std::pair<int, cplx>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, cplx>> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const auto& t) {
    return t.second == cplx(0.0, 0.0);
  });
  return TorusFunction(TrigPolynomial{std::move(merged)});
}

TorusFunction TorusFunction::from_coefficients(const CoefficientSequence& c) {
  std::vector<std::pair<int, cplx>> terms;
  for (int n = -c.half_width(); n <= c.half_width(); ++n)
    if (c.at(n) != cplx(0.0, 0.0)) terms.emplace_back(n, c.at(n));
  return TorusFunction(TrigPolynomial{std::move(terms)});
}

TorusFunction TorusFunction::character(int n) {
  return TorusFunction(TrigPolynomial{{{n, cplx(1.0, 0.0)}}});
}

TorusFunction TorusFunction::constant(cplx c) {
  if (c == cplx(0.0, 0.0)) return TorusFunction(TrigPolynomial{{}});
  return TorusFunction(TrigPolynomial{{{0, c}}});
}

TorusFunction TorusFunction::piecewise(
    const std::vector<std::tuple<double, double, cplx>>& pieces) {
  if (pieces.empty())
    throw std::invalid_argument("piecewise: need at least one piece");
  auto sorted = pieces;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::get<0>(a) < std::get<0>(b);
  });
  const double tol = 1e-12;
  if (std::abs(std::get<0>(sorted.front()) + pi) > tol)
    throw std::invalid_argument("piecewise: pieces must start at -pi");
  PiecewiseConstant pc;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    auto [from, to, value] = sorted[i];
    if (!(to > from))
      throw std::invalid_argument("piecewise: empty or reversed piece");
    double expected_next =
        (i + 1 < sorted.size()) ? std::get<0>(sorted[i + 1]) : pi;
    if (std::abs(to - expected_next) > tol)
      throw std::invalid_argument("piecewise: pieces must tile [-pi, pi)");
    pc.breaks.push_back(i == 0 ? -pi : from);
    pc.values.push_back(value);
  }
  return TorusFunction(std::move(pc));
}

TorusFunction TorusFunction::sign_function() {
  PiecewiseConstant pc;
  pc.breaks = {-pi, 0.0};
  pc.values = {cplx(-1.0, 0.0), cplx(1.0, 0.0)};
  return TorusFunction(std::move(pc));
}

TorusFunction TorusFunction::indicator(double a, double b) {
  if (!(a >= -pi && a < b && b <= pi))
    throw std::invalid_argument("indicator: need -pi <= a < b <= pi");
  PiecewiseConstant pc;
  pc.breaks.push_back(-pi);
  pc.values.push_back(a > -pi ? cplx(0.0, 0.0) : cplx(1.0, 0.0));
  if (a > -pi) {
    pc.breaks.push_back(a);
    pc.values.push_back(cplx(1.0, 0.0));
  }
  if (b < pi) {
    pc.breaks.push_back(b);
    pc.values.push_back(cplx(0.0, 0.0));
  }
  return TorusFunction(std::move(pc));
}

TorusFunction TorusFunction::named(const std::string& name, double r) {
  return TorusFunction(NamedClosedForm{name, r});
}

TorusFunction TorusFunction::sampled(const TorusGrid& grid,
                                     std::vector<cplx> samples) {
  return TorusFunction(SampledGrid{grid, std::move(samples)});
}

bool TorusFunction::is_band_limited() const {
  return std::holds_alternative<TrigPolynomial>(spec_);
}

int TorusFunction::degree() const {
  auto* tp = as<TrigPolynomial>();
  if (tp == nullptr)
    throw std::invalid_argument("degree: only defined for TrigPolynomial");
  int d = 0;
  for (const auto& [n, c] : tp->terms) d = std::max(d, std::abs(n));
  return d;
}

TorusMeasure::TorusMeasure(std::vector<Atom> atoms,
                           std::optional<TorusFunction> density,
                           double merge_tol)
    : density_(std::move(density)) {
  for (auto& a : atoms) a.angle = reduce_angle(a.angle);
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.angle < b.angle; });
  for (const auto& a : atoms) {
    if (!atoms_.empty() && a.angle - atoms_.back().angle <= merge_tol)
      atoms_.back().mass += a.mass;
    else
      atoms_.push_back(a);
  }
  // Wrap-around pair: -pi + eps and pi - eps are 2 eps apart on the circle.
  if (atoms_.size() > 1 &&
      (atoms_.front().angle + two_pi) - atoms_.back().angle <= merge_tol) {
    atoms_.front().mass += atoms_.back().mass;
    atoms_.pop_back();
  }
}

TorusMeasure TorusMeasure::point_mass(double angle, cplx mass) {
  return TorusMeasure({Atom{angle, mass}}, std::nullopt);
}

TorusMeasure TorusMeasure::from_density(TorusFunction f) {
  return TorusMeasure({}, std::move(f));
}

double TorusMeasure::total_variation(const TorusGrid& grid) const {
  double tv = 0.0;
  for (const auto& a : atoms_) tv += std::abs(a.mass);
  if (density_) tv += lp_norm(*density_, 1.0, grid);
  return tv;
}

cplx evaluate(const TorusFunction& f, double x) {
  x = reduce_angle(x);
  if (auto* tp = f.as<TorusFunction::TrigPolynomial>()) {
    detail::KahanSumC acc;
    for (const auto& [n, c] : tp->terms)
      acc.add(c * std::polar(1.0, n * x));
    return acc.value();
  }
  if (auto* pc = f.as<TorusFunction::PiecewiseConstant>()) {
    auto it = std::upper_bound(pc->breaks.begin(), pc->breaks.end(), x);
    std::size_t idx = (it == pc->breaks.begin())
                          ? 0
                          : static_cast<std::size_t>(it - pc->breaks.begin() - 1);
    return pc->values[idx];
  }
  if (auto* nf = f.as<TorusFunction::NamedClosedForm>()) {
    if (nf->name == "geometric_pole")
      return 1.0 / (1.0 - nf->r * std::polar(1.0, x));
    // poisson
    double r = nf->r;
    return cplx((1.0 - r * r) / (1.0 - 2.0 * r * std::cos(x) + r * r), 0.0);
  }
  auto* sg = f.as<TorusFunction::SampledGrid>();
  int n = sg->grid.size();
  long long j = std::llround((x + pi) * n / two_pi);
  j = ((j % n) + n) % n;
  return sg->samples[static_cast<std::size_t>(j)];
}

std::vector<cplx> evaluate_on_grid(const TorusFunction& f,
                                   const TorusGrid& grid) {
  const int n = grid.size();
  if (auto* tp = f.as<TorusFunction::TrigPolynomial>()) {
    if (!tp->terms.empty() && f.degree() <= grid.aliasing_threshold()) {
      CoefficientSequence c = CoefficientSequence::zeros(f.degree());
      for (const auto& [k, v] : tp->terms) c.ref(k) = v;
      return fft::synthesize_on_grid(grid, c);
    }
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out[j] = evaluate(f, grid.node(j));
    return out;
  }
  if (auto* sg = f.as<TorusFunction::SampledGrid>()) {
    if (!(sg->grid == grid))
      throw std::invalid_argument(
          "evaluate_on_grid: sampled function lives on a different grid");
    return sg->samples;
  }
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[j] = evaluate(f, grid.node(j));
  return out;
}

namespace {

double finite_p_norm_from_samples(const std::vector<cplx>& s, double p) {
  detail::KahanSum acc;
  if (p == 1.0) {
    for (const auto& z : s) acc.add(std::abs(z));
  } else if (p == 2.0) {
    for (const auto& z : s) acc.add(std::norm(z));
  } else {
    for (const auto& z : s) acc.add(std::pow(std::abs(z), p));
  }
  double mean = acc.value() / static_cast<double>(s.size());
  if (p == 1.0) return mean;
  if (p == 2.0) return std::sqrt(mean);
  return std::pow(mean, 1.0 / p);
}

}  // namespace

double lp_norm(const TorusFunction& f, double p, const TorusGrid& grid) {
  if (!(p >= 1.0))
    throw std::domain_error("lp_norm: p must be >= 1");
  const bool inf_p = std::isinf(p);

  if (auto* pc = f.as<TorusFunction::PiecewiseConstant>()) {
    // Exact: the function is literally a simple function.
    if (inf_p) {
      double m = 0.0;
      for (const auto& v : pc->values) m = std::max(m, std::abs(v));
      return m;
    }
    detail::KahanSum acc;
    for (std::size_t i = 0; i < pc->breaks.size(); ++i) {
      double hi = (i + 1 < pc->breaks.size()) ? pc->breaks[i + 1] : pi;
      double len = hi - pc->breaks[i];
      acc.add(len * std::pow(std::abs(pc->values[i]), p));
    }
    return std::pow(acc.value() / two_pi, 1.0 / p);
  }
  if (p == 2.0 && f.is_band_limited()) {
    // Parseval, exact for trigonometric polynomials.
    auto* tp = f.as<TorusFunction::TrigPolynomial>();
    detail::KahanSum acc;
    for (const auto& [n, c] : tp->terms) acc.add(std::norm(c));
    return std::sqrt(acc.value());
  }

  std::vector<cplx> s = evaluate_on_grid(f, grid);
  if (inf_p) {
    double m = 0.0;
    for (const auto& z : s) m = std::max(m, std::abs(z));
    return m;
  }
  return finite_p_norm_from_samples(s, p);
}

double lq_sequence_norm(const CoefficientSequence& c, double q) {
  if (!(q >= 1.0))
    throw std::domain_error("lq_sequence_norm: q must be >= 1");
  if (std::isinf(q)) {
    double m = 0.0;
    for (const auto& z : c.values()) m = std::max(m, std::abs(z));
    return m;
  }
  detail::KahanSum acc;
  if (q == 2.0) {
    for (const auto& z : c.values()) acc.add(std::norm(z));
    return std::sqrt(acc.value());
  }
  if (q == 1.0) {
    for (const auto& z : c.values()) acc.add(std::abs(z));
    return acc.value();
  }
  for (const auto& z : c.values()) acc.add(std::pow(std::abs(z), q));
  return std::pow(acc.value(), 1.0 / q);
}

namespace detail {

namespace {

std::pair<std::vector<double>, std::vector<double>> compute_gl(int order) {
  std::vector<double> x(order), w(order);
  for (int i = 0; i < order; ++i) {
    // Tricomi initial guess, then Newton on P_order.
    double xi = std::cos(pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < order; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * xi * p1 - k * p2) / (k + 1.0);
      }
      pp = order * (xi * p0 - p1) / (xi * xi - 1.0);
      double dx = p0 / pp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[i] = xi;
    w[i] = 2.0 / ((1.0 - xi * xi) * pp * pp);
  }
  return {x, w};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(
    int order) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
  return it->second;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int order) {
  const auto& [x, w] = gauss_legendre(order);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  KahanSum acc;
  for (int i = 0; i < order; ++i) acc.add(w[i] * f(mid + half * x[i]));
  return half * acc.value();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min(threads, 8u);
  if (const char* env = std::getenv("TORUS_HARMONICS_THREADS")) {
    long t = std::strtol(env, nullptr, 10);
    if (t >= 1) threads = static_cast<unsigned>(t);
  }
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

}  // namespace torus
