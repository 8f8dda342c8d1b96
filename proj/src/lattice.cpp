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

#include "torus/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "torus/detail/numeric.hpp"
#include "torus/fft.hpp"
#include "torus/rng.hpp"

namespace torus {

namespace {

constexpr std::uint64_t kSpotCheckSeed = 0x5eed0b0d5ULL;

// Probabilistic sanity check of the declared invariants: origin symmetry
// everywhere, convexity via midpoints of interior pairs.
void spot_check_body(const ConvexBody2D& body) {
  if (!body.indicator) throw std::invalid_argument("ConvexBody2D: no indicator");
  if (!std::isfinite(body.bbox_x) || !std::isfinite(body.bbox_y)) return;
  if (!(body.bbox_x > 0.0 && body.bbox_y > 0.0))
    throw std::invalid_argument("ConvexBody2D: bbox must be positive");

  std::vector<std::pair<double, double>> inside;
  for (std::uint64_t i = 0; i < 256; ++i) {
    const double x = (2.0 * uniform_at(kSpotCheckSeed, 2 * i) - 1.0) * body.bbox_x;
    const double y = (2.0 * uniform_at(kSpotCheckSeed, 2 * i + 1) - 1.0) * body.bbox_y;
    if (body.indicator(x, y) != body.indicator(-x, -y))
      throw std::invalid_argument("ConvexBody2D: indicator is not origin-symmetric");
    if (body.indicator(x, y)) inside.emplace_back(x, y);
  }
  for (std::size_t i = 1; i < inside.size(); ++i) {
    const double mx = 0.5 * (inside[i - 1].first + inside[i].first);
    const double my = 0.5 * (inside[i - 1].second + inside[i].second);
    if (!body.indicator(mx, my))
      throw std::invalid_argument("ConvexBody2D: indicator is not convex");
  }
}

std::optional<std::pair<int, int>> shell_search(const ConvexBody2D& body,
                                                int radius_bound) {
  spot_check_body(body);
  const double max_extent = std::max(body.bbox_x, body.bbox_y);
  if (std::isfinite(max_extent) &&
      radius_bound < static_cast<int>(std::ceil(max_extent)))
    throw std::invalid_argument(
        "minkowski search: radius_bound must cover the bounding box");

  for (int r = 1; r <= radius_bound; ++r) {
    for (const auto& [m, n] : lattice_shell(r)) {
      if (!body.indicator(static_cast<double>(m), static_cast<double>(n)))
        continue;
      if (std::abs(m) > body.bbox_x + 1e-9 || std::abs(n) > body.bbox_y + 1e-9)
        throw ContractViolation(
            "minkowski search: indicator hit outside the declared bbox");
      return std::make_pair(m, n);
    }
  }

  const double margin = body.area_exact ? 0.0 : 3.0 * body.area_std_error;
  if (body.area - margin > 4.0)
    throw ContractViolation(
        "minkowski search: area exceeds 4 but no lattice point was found");
  return std::nullopt;
}

}  // namespace

ConvexBody2D ConvexBody2D::rectangle(double hx, double hy, bool closed) {
  if (!(hx > 0.0 && hy > 0.0))
    throw std::invalid_argument("rectangle: half-extents must be positive");
  ConvexBody2D b;
  b.indicator = [hx, hy, closed](double x, double y) {
    return closed ? (std::abs(x) <= hx && std::abs(y) <= hy)
                  : (std::abs(x) < hx && std::abs(y) < hy);
  };
  b.bbox_x = hx;
  b.bbox_y = hy;
  b.area = 4.0 * hx * hy;
  b.area_exact = true;
  return b;
}

ConvexBody2D ConvexBody2D::ellipse(double a, double bb, bool closed) {
  if (!(a > 0.0 && bb > 0.0))
    throw std::invalid_argument("ellipse: semi-axes must be positive");
  ConvexBody2D b;
  b.indicator = [a, bb, closed](double x, double y) {
    const double q = (x / a) * (x / a) + (y / bb) * (y / bb);
    return closed ? q <= 1.0 : q < 1.0;
  };
  b.bbox_x = a;
  b.bbox_y = bb;
  b.area = pi * a * bb;
  b.area_exact = true;
  return b;
}

ConvexBody2D ConvexBody2D::parallelogram(double p, double q, double s, double t,
                                         bool closed) {
  const double det = p * t - q * s;
  if (det == 0.0)
    throw std::invalid_argument("parallelogram: spanning vectors are parallel");
  ConvexBody2D b;
  b.indicator = [p, q, s, t, det, closed](double x, double y) {
    const double alpha = (x * t - y * s) / det;
    const double beta = (p * y - q * x) / det;
    return closed ? (std::abs(alpha) <= 1.0 && std::abs(beta) <= 1.0)
                  : (std::abs(alpha) < 1.0 && std::abs(beta) < 1.0);
  };
  b.bbox_x = std::abs(p) + std::abs(s);
  b.bbox_y = std::abs(q) + std::abs(t);
  b.area = 4.0 * std::abs(det);
  b.area_exact = true;
  return b;
}

ConvexBody2D ConvexBody2D::linear_form_body(double a, double bb, double c,
                                            double d, double s, double t) {
  if (!(s > 0.0 && t > 0.0))
    throw std::invalid_argument("linear_form_body: bounds must be positive");
  ConvexBody2D b;
  b.indicator = [a, bb, c, d, s, t](double x, double y) {
    return std::abs(a * x + bb * y) <= s && std::abs(c * x + d * y) <= t;
  };
  const double det = a * d - bb * c;
  if (det != 0.0) {
    // Corner preimages of the (s, t) box under the linear map.
    double cx = 0.0, cy = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double u = (i & 1) ? s : -s;
      const double v = (i & 2) ? t : -t;
      cx = std::max(cx, std::abs((d * u - bb * v) / det));
      cy = std::max(cy, std::abs((a * v - c * u) / det));
    }
    b.bbox_x = cx;
    b.bbox_y = cy;
    b.area = 4.0 * s * t / std::abs(det);
  } else {
    b.bbox_x = std::numeric_limits<double>::infinity();
    b.bbox_y = std::numeric_limits<double>::infinity();
    b.area = std::numeric_limits<double>::infinity();
  }
  b.area_exact = true;
  return b;
}

ConvexBody2D ConvexBody2D::polygon(
    const std::vector<std::pair<double, double>>& v) {
  const std::size_t n = v.size();
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument(
        "polygon: an origin-symmetric polygon has an even vertex count >= 4");
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (std::abs(v[i].first + v[i + n / 2].first) > 1e-12 ||
        std::abs(v[i].second + v[i + n / 2].second) > 1e-12)
      throw std::invalid_argument("polygon: vertices are not origin-symmetric");
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x0, y0] = v[i];
    const auto& [x1, y1] = v[(i + 1) % n];
    const double cross = x0 * y1 - x1 * y0;
    if (cross <= 0.0)
      throw std::invalid_argument("polygon: vertices must wind CCW and convex");
    area2 += cross;
  }
  ConvexBody2D b;
  b.indicator = [verts = v](double x, double y) {
    const std::size_t m = verts.size();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& [x0, y0] = verts[i];
      const auto& [x1, y1] = verts[(i + 1) % m];
      if ((x1 - x0) * (y - y0) - (y1 - y0) * (x - x0) < -1e-12) return false;
    }
    return true;
  };
  for (const auto& [x, y] : v) {
    b.bbox_x = std::max(b.bbox_x, std::abs(x));
    b.bbox_y = std::max(b.bbox_y, std::abs(y));
  }
  b.area = 0.5 * area2;
  b.area_exact = true;
  return b;
}

std::pair<double, double> monte_carlo_area(const ConvexBody2D& body,
                                           std::size_t samples,
                                           std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("monte_carlo_area: no samples");
  if (!std::isfinite(body.bbox_x) || !std::isfinite(body.bbox_y))
    throw std::invalid_argument("monte_carlo_area: unbounded body");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x =
        (2.0 * uniform_at(seed, 2 * i) - 1.0) * body.bbox_x;
    const double y =
        (2.0 * uniform_at(seed, 2 * i + 1) - 1.0) * body.bbox_y;
    if (body.indicator(x, y)) ++hits;
  }
  const double box = 4.0 * body.bbox_x * body.bbox_y;
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  const double est = p * box;
  const double se = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return {est, se};
}

std::vector<std::pair<int, int>> lattice_shell(int r) {
  if (r < 1) throw std::invalid_argument("lattice_shell: r < 1");
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(8) * r);
  for (int y = 0; y < r; ++y) out.emplace_back(r, y);        // right edge up
  for (int x = r; x > -r; --x) out.emplace_back(x, r);       // top edge left
  for (int y = r; y > -r; --y) out.emplace_back(-r, y);      // left edge down
  for (int x = -r; x < r; ++x) out.emplace_back(x, -r);      // bottom edge right
  for (int y = -r; y < 0; ++y) out.emplace_back(r, y);       // right edge to start
  return out;
}

std::optional<std::pair<int, int>> minkowski_search(const ConvexBody2D& body,
                                                    int radius_bound) {
  return shell_search(body, radius_bound);
}

std::optional<std::pair<int, int>> boundary_minkowski_search(
    const ConvexBody2D& body, int radius_bound) {
  return shell_search(body, radius_bound);
}

std::pair<int, int> parallelogram_pair(double a, double b, double c, double d,
                                       double k, int radius_bound) {
  if (!(k > 0.0)) throw std::invalid_argument("parallelogram_pair: k <= 0");
  const double det = a * d - b * c;
  if (std::abs(det) > 1.0)
    throw std::invalid_argument("parallelogram_pair: |ad - bc| must be <= 1");

  int radius = radius_bound;
  if (radius <= 0) {
    if (det != 0.0) {
      const ConvexBody2D body =
          ConvexBody2D::linear_form_body(a, b, c, d, k, 1.0 / k);
      radius = static_cast<int>(std::ceil(std::max(body.bbox_x, body.bbox_y)));
    } else {
      radius = 1024;
    }
  }

  for (int r = 1; r <= radius; ++r) {
    for (const auto& [m, n] : lattice_shell(r)) {
      // Re-evaluate the defining inequalities directly; plain comparisons,
      // closed parallelogram.
      if (std::abs(a * m + b * n) <= k && std::abs(c * m + d * n) <= 1.0 / k)
        return {m, n};
    }
  }
  throw SearchExhausted(
      "parallelogram_pair: no admissible pair within the radius bound");
}

DiophantineResult diophantine_approx(double a, int count) {
  if (count < 1) throw std::invalid_argument("diophantine_approx: count < 1");
  DiophantineResult out;

  // Continued-fraction convergents p/q of a; the integer-part convergent
  // q = 1 is skipped (the theorem's pairs have m >= 2 for irrational a in
  // practice, and the q = 1 pair is the trivial floor approximation).
  double x = a;
  long long p_prev = 1, q_prev = 0;          // h_{-1}, k_{-1}
  long long p_curr = 0, q_curr = 1;          // convergent p0/q0 built below
  {
    const double a0 = std::floor(x);
    p_curr = static_cast<long long>(a0);
    q_curr = 1;
    x -= a0;
  }
  while (static_cast<int>(out.pairs.size()) < count) {
    if (x < 1e-15) {
      out.exact_hit = true;  // rational: the last convergent is exact
      break;
    }
    x = 1.0 / x;
    const double digit = std::floor(x);
    if (digit > 9e15) {
      out.exact_hit = true;  // next denominator overflows double integers
      break;
    }
    x -= digit;
    const long long ai = static_cast<long long>(digit);
    const long long p_next = ai * p_curr + p_prev;
    const long long q_next = ai * q_curr + q_prev;
    p_prev = p_curr;
    q_prev = q_curr;
    p_curr = p_next;
    q_curr = q_next;
    if (q_curr > 100'000'000'000'000LL) break;  // past double resolution

    const double err = std::abs(a - static_cast<double>(p_curr) /
                                        static_cast<double>(q_curr));
    const double bound =
        1.0 / (static_cast<double>(q_curr) * static_cast<double>(q_curr));
    if (err > bound)
      throw ContractViolation(
          "diophantine_approx: convergent failed its defining bound");
    out.pairs.emplace_back(q_curr, p_curr);
  }
  return out;
}

std::pair<long long, long long> diophantine_pigeonhole(double a, long long Q) {
  if (Q < 1) throw std::invalid_argument("diophantine_pigeonhole: Q < 1");
  // Q+1 fractional parts {j a} must have two within 1/Q of each other; the
  // closest adjacent pair after sorting is such a pair.
  std::vector<std::pair<double, long long>> fracs;
  fracs.reserve(static_cast<std::size_t>(Q) + 1);
  for (long long j = 0; j <= Q; ++j) {
    const double ja = a * static_cast<double>(j);
    fracs.emplace_back(ja - std::floor(ja), j);
  }
  std::sort(fracs.begin(), fracs.end());
  double best = 2.0;
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < fracs.size(); ++i) {
    const double gap = fracs[i].first - fracs[i - 1].first;
    if (gap < best) {
      best = gap;
      best_i = i;
    }
  }
  const long long j1 = fracs[best_i - 1].second;
  const long long j2 = fracs[best_i].second;
  const long long m = std::llabs(j2 - j1);
  const long long n =
      static_cast<long long>(std::floor(a * static_cast<double>(std::max(j1, j2))) -
                             std::floor(a * static_cast<double>(std::min(j1, j2))));
  if (m == 0)
    throw ContractViolation("diophantine_pigeonhole: degenerate duplicate index");
  if (std::abs(a * static_cast<double>(m) - static_cast<double>(n)) >
      1.0 / static_cast<double>(Q) + 1e-12)
    throw ContractViolation("diophantine_pigeonhole: pair failed its bound");
  return {m, n};
}

Torus2Function Torus2Function::from_samples(int size, std::vector<cplx> values) {
  if (size < 4 || size % 2 != 0)
    throw std::invalid_argument("Torus2Function: size must be even and >= 4");
  if (values.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
    throw std::invalid_argument("Torus2Function: need size*size samples");
  return Torus2Function{size, std::move(values)};
}

double parseval_2d_check(const Torus2Function& f, int degree) {
  if (degree < 0) throw std::invalid_argument("parseval_2d_check: degree < 0");
  const int n = f.size;
  if (2 * degree >= n)
    throw std::invalid_argument("parseval_2d_check: degree aliases on this grid");

  const std::vector<cplx> bins = fft::dft2d(f.values, n, /*forward=*/true);
  const double scale = 1.0 / (static_cast<double>(n) * n);

  detail::KahanSum coeff_sq;
  for (int m = -degree; m <= degree; ++m)
    for (int l = -degree; l <= degree; ++l) {
      const int bm = ((m % n) + n) % n;
      const int bl = ((l % n) + n) % n;
      coeff_sq.add(std::norm(bins[static_cast<std::size_t>(bm) * n + bl] * scale));
    }

  detail::KahanSum f_sq;
  for (const cplx& z : f.values) f_sq.add(std::norm(z));

  return std::abs(coeff_sq.value() - f_sq.value() * scale);
}

}  // namespace torus
