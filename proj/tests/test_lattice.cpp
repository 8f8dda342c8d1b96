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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "torus/lattice.hpp"
#include "torus/rng.hpp"

using namespace torus;

TEST_CASE("lattice shells walk the perimeter counterclockwise") {
  const auto s1 = lattice_shell(1);
  REQUIRE(s1.size() == 8);
  CHECK(s1[0] == std::pair<int, int>(1, 0));
  CHECK(s1[1] == std::pair<int, int>(1, 1));
  CHECK(s1[2] == std::pair<int, int>(0, 1));
  CHECK(s1[3] == std::pair<int, int>(-1, 1));
  CHECK(s1[4] == std::pair<int, int>(-1, 0));
  CHECK(s1[5] == std::pair<int, int>(-1, -1));
  CHECK(s1[6] == std::pair<int, int>(0, -1));
  CHECK(s1[7] == std::pair<int, int>(1, -1));

  // Shell r has 8r points, all at sup-norm exactly r, no duplicates.
  for (int r : {2, 3, 7}) {
    const auto s = lattice_shell(r);
    CHECK(s.size() == static_cast<size_t>(8 * r));
    std::set<std::pair<int, int>> seen(s.begin(), s.end());
    CHECK(seen.size() == s.size());
    for (const auto& [m, n] : s)
      CHECK(std::max(std::abs(m), std::abs(n)) == r);
  }
  CHECK_THROWS_AS(lattice_shell(0), std::invalid_argument);
}

TEST_CASE("minkowski search finds the first shell hit") {
  // Ellipse with a = 2, b = 2: area 4 pi > 4, and (1, 0) is inside.
  const auto hit = minkowski_search(ConvexBody2D::ellipse(2.0, 2.0), 8);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::pair<int, int>(1, 0));

  // Tall thin open rectangle |x| < 0.5, |y| < 3: (0, 1) is the first hit in
  // shell order after (1, 0) fails.
  const auto tall = minkowski_search(ConvexBody2D::rectangle(0.5, 3.0), 8);
  REQUIRE(tall.has_value());
  CHECK(*tall == std::pair<int, int>(0, 1));

  // Open unit square |x|, |y| < 1 has area 4 and no nonzero point.
  CHECK(!minkowski_search(ConvexBody2D::rectangle(1.0, 1.0), 8).has_value());

  // Closed version picks up the boundary point (1, 0).
  const auto closed =
      boundary_minkowski_search(ConvexBody2D::rectangle(1.0, 1.0, true), 8);
  REQUIRE(closed.has_value());
  CHECK(*closed == std::pair<int, int>(1, 0));
}

TEST_CASE("linear form body reproduces the two-form search") {
  // |x + pi y| <= 1/2 and |0 x + (1/4) y|... use a = 1, b = pi, c = 0,
  // d = 1/4, s = 1/2, t = 4: determinant 1/4, area 4 s t / |det| = 32 > 4.
  const auto body = ConvexBody2D::linear_form_body(1.0, pi, 0.0, 0.25, 0.5, 4.0);
  const auto hit = minkowski_search(body, 64);
  REQUIRE(hit.has_value());
  const auto [m, n] = *hit;
  CHECK(std::abs(m + pi * n) <= 0.5);
  CHECK(std::abs(0.25 * n) <= 4.0);
  CHECK((m != 0 || n != 0));
  CHECK(*hit == std::pair<int, int>(-3, 1));
}

TEST_CASE("factory areas are exact") {
  CHECK(ConvexBody2D::rectangle(1.5, 2.0).area == doctest::Approx(12.0));
  CHECK(ConvexBody2D::rectangle(1.5, 2.0).area_exact);
  CHECK(ConvexBody2D::ellipse(1.0, 2.0).area == doctest::Approx(2 * pi));
  CHECK(ConvexBody2D::parallelogram(1, 0, 0, 1).area == doctest::Approx(4.0));
  // Polygon: shoelace formula; diamond with vertices at distance 1 has area 2.
  const auto d = ConvexBody2D::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(d.area_exact);
  CHECK(d.area == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(ConvexBody2D::polygon({{1, 0}, {0, 1}, {-1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConvexBody2D::polygon({{1, 0}, {0, -1}, {-1, 0}, {0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("monte carlo area is reproducible and seed-sensitive") {
  const auto body = ConvexBody2D::ellipse(1.0, 1.0);
  const auto a = monte_carlo_area(body, 100000, 7);
  const auto b = monte_carlo_area(body, 100000, 7);
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
  const auto c = monte_carlo_area(body, 100000, 8);
  CHECK(a.first != c.first);
  // Within five standard errors of pi.
  CHECK(std::abs(a.first - pi) <= 5.0 * a.second);
}

TEST_CASE("parallelogram pair satisfies both form bounds") {
  // a = 1, b = sqrt(2), c = 0, d = 1, det = 1.
  const double k = 0.25;
  const auto [m, n] = parallelogram_pair(1.0, std::sqrt(2.0), 0.0, 1.0, k);
  CHECK((m != 0 || n != 0));
  CHECK(std::abs(m + std::sqrt(2.0) * n) <= k + 1e-12);
  CHECK(std::abs(static_cast<double>(n)) <= 1.0 / k + 1e-12);
  // A needle so thin that the nearest admissible point sits far beyond the
  // search radius: |m + sqrt(2) n| <= 1e-3 needs |n| in the hundreds.
  CHECK_THROWS_AS(parallelogram_pair(1.0, std::sqrt(2.0), 0.0, 1.0, 1e-3, 4),
                  SearchExhausted);
}

TEST_CASE("diophantine convergents match the continued fraction of pi") {
  const auto r = diophantine_approx(pi, 4);
  REQUIRE(r.pairs.size() == 4);
  CHECK(r.pairs[0] == std::pair<long long, long long>(7, 22));
  CHECK(r.pairs[1] == std::pair<long long, long long>(106, 333));
  CHECK(r.pairs[2] == std::pair<long long, long long>(113, 355));
  CHECK(!r.exact_hit);
  for (const auto& [m, n] : r.pairs) {
    CHECK(std::abs(pi - static_cast<double>(n) / m) <=
          1.0 / (static_cast<double>(m) * m));
  }
}

TEST_CASE("diophantine convergents for sqrt(2) and a rational") {
  const auto r = diophantine_approx(std::sqrt(2.0), 3);
  REQUIRE(r.pairs.size() == 3);
  CHECK(r.pairs[0] == std::pair<long long, long long>(2, 3));
  CHECK(r.pairs[1] == std::pair<long long, long long>(5, 7));
  CHECK(r.pairs[2] == std::pair<long long, long long>(12, 17));

  const auto half = diophantine_approx(0.5, 5);
  CHECK(half.exact_hit);
  REQUIRE(!half.pairs.empty());
  CHECK(half.pairs.back() == std::pair<long long, long long>(2, 1));
}

TEST_CASE("pigeonhole pair obeys its bound and cross-checks convergents") {
  for (double a : {pi, std::exp(1.0), std::sqrt(2.0)}) {
    for (long long Q : {10LL, 100LL, 1000LL}) {
      const auto [m, n] = diophantine_pigeonhole(a, Q);
      CHECK(m >= 1);
      CHECK(m <= Q);
      CHECK(std::abs(m * a - static_cast<double>(n)) <= 1.0 / Q + 1e-12);
    }
  }
}

TEST_CASE("2d parseval check is small for band-limited samples") {
  const int size = 32;
  Rng rng(5);
  // f(x, y) = sum over a small frequency box of gaussian coefficients.
  std::vector<cplx> values(static_cast<size_t>(size) * size);
  std::vector<std::vector<cplx>> coef(7, std::vector<cplx>(7));
  for (auto& row : coef)
    for (auto& z : row) z = rng.gaussian_cplx();
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      cplx v = 0;
      for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n)
          v += coef[m + 3][n + 3] *
               std::polar(1.0, two_pi * (m * j + n * k) /
                                   static_cast<double>(size));
      values[static_cast<size_t>(j) * size + k] = v;
    }
  }
  const auto f = Torus2Function::from_samples(size, std::move(values));
  CHECK(parseval_2d_check(f, 3) <= 1e-10);
}
