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
#include <complex>

#include "torus/analysis.hpp"
#include "torus/summability.hpp"

using namespace torus;

TEST_CASE("cesaro mean applies triangular weights exactly") {
  const TorusGrid grid(256);
  const auto f = TorusFunction::trig_polynomial(
      {{-3, cplx(1, 0)}, {0, cplx(2, 0)}, {5, cplx(0, 1)}});
  const auto m = cesaro_mean(f, 8, grid);
  const auto c = fourier_coefficients(m, 8, grid);
  CHECK(std::abs(c.at(-3) - cplx(1 - 3.0 / 8, 0)) <= 1e-14);
  CHECK(std::abs(c.at(0) - cplx(2, 0)) <= 1e-14);
  CHECK(std::abs(c.at(5) - cplx(0, 1 - 5.0 / 8.0)) <= 1e-14);
  CHECK(std::abs(c.at(8)) <= 1e-15);
}

TEST_CASE("abel mean damps by powers of r") {
  const TorusGrid grid(256);
  const auto f = TorusFunction::trig_polynomial(
      {{-2, cplx(1, 0)}, {4, cplx(1, 0)}});
  const auto m = abel_mean(f, 0.5, grid);
  const auto c = fourier_coefficients(m, 8, grid);
  CHECK(std::abs(c.at(-2) - cplx(0.25, 0)) <= 1e-14);
  CHECK(std::abs(c.at(4) - cplx(0.0625, 0)) <= 1e-14);
}

TEST_CASE("pointwise means of sign vanish at the symmetric jump") {
  const TorusGrid grid(4096);
  const auto f = TorusFunction::sign_function();
  CHECK(cesaro_value(f, 64, 0.0, grid) == cplx(0, 0));
  CHECK(abel_value(f, 0.9, 0.0, grid) == cplx(0, 0));
  CHECK(partial_sum_value(f, 64, 0.0, grid) == cplx(0, 0));
}

TEST_CASE("partial sums of sign overshoot while cesaro means stay inside") {
  const TorusGrid grid(8192);
  const auto f = TorusFunction::sign_function();
  // Gibbs: S_n near the jump exceeds 1 by about 9 percent.
  const double gibbs = partial_sum_value(f, 128, pi / 129.0, grid).real();
  CHECK(gibbs > 1.08);
  // Fejer means of a function with |f| <= 1 never leave [-1, 1].
  for (double x = -3.0; x <= 3.0; x += 0.37) {
    CHECK(std::abs(cesaro_value(f, 128, x, grid).real()) <= 1.0 + 1e-12);
  }
}

TEST_CASE("jump midpoint rule for the fejer family") {
  const TorusGrid grid(8192);
  const auto f = TorusFunction::indicator(0.0, pi / 2);
  // At x = 0 the one-sided limits are 0 and 1, so means approach 1/2.
  const auto rep = jump_midpoint_check(f, 0.0, JumpFamily::fejer,
                                       {8, 64, 1024}, grid);
  REQUIRE(rep.errors.size() == 3);
  CHECK(rep.errors[0] == doctest::Approx(0.01960427285744676).epsilon(1e-9));
  CHECK(rep.errors[1] == doctest::Approx(0.0024861895968121828).epsilon(1e-9));
  CHECK(rep.errors[2] == doctest::Approx(0.00015542460088913135).epsilon(1e-7));
  CHECK(rep.errors[2] < rep.errors[1]);
  CHECK(rep.errors[1] < rep.errors[0]);
}

TEST_CASE("jump midpoint rule for the poisson family") {
  const TorusGrid grid(8192);
  const auto f = TorusFunction::sign_function();
  // Midpoint at the jump of sign is 0 and symmetric means hit it exactly.
  const auto rep = jump_midpoint_check(f, 0.0, JumpFamily::poisson,
                                       {0.5, 0.9, 0.99}, grid);
  for (double e : rep.errors) CHECK(e <= 1e-12);
}

TEST_CASE("l1 convergence of fejer means of sign") {
  const TorusGrid grid(8192);
  const auto f = TorusFunction::sign_function();
  const auto rep = norm_convergence_report(f, NormMode::lp(1.0),
                                           SumMethod::cesaro, {8, 512}, grid);
  REQUIRE(rep.errors.size() == 2);
  CHECK(rep.errors[0] == doctest::Approx(0.2202359262134509).epsilon(1e-10));
  CHECK(rep.errors[1] == doctest::Approx(0.0067403245492261175).epsilon(1e-8));
}

TEST_CASE("sup convergence for a continuous function, rejection for jumps") {
  const TorusGrid grid(4096);
  const auto f = TorusFunction::named("poisson", 0.5);
  const auto rep = norm_convergence_report(f, NormMode::sup(),
                                           SumMethod::cesaro, {4, 16, 64}, grid);
  CHECK(rep.errors[0] > rep.errors[1]);
  CHECK(rep.errors[1] > rep.errors[2]);
  // All deficiency coefficients share a sign, so the sup sits at x = 0:
  // error(n) = (2/n) sum_{k<n} k r^k + 2 r^n/(1-r), exactly 0.9375 at n = 4
  // and 0.0625 at n = 64 for r = 1/2.
  CHECK(rep.errors[0] == doctest::Approx(0.9375).epsilon(1e-12));
  CHECK(rep.errors[2] == doctest::Approx(0.0625).epsilon(1e-9));
  CHECK_THROWS_AS(
      norm_convergence_report(TorusFunction::sign_function(), NormMode::sup(),
                              SumMethod::cesaro, {4}, grid),
      std::invalid_argument);
}

TEST_CASE("raw partial sums of a bounded-variation jump converge in l1") {
  // Norm convergence of S_n is fine for sign; the failure of raw partial
  // sums is pointwise (Gibbs) and for rougher functions. Frozen values.
  const TorusGrid grid(8192);
  const auto f = TorusFunction::sign_function();
  const auto raw = norm_convergence_report(f, NormMode::lp(1.0),
                                           SumMethod::raw_partial_sum,
                                           {8, 64, 512}, grid);
  REQUIRE(raw.errors.size() == 3);
  CHECK(raw.errors[0] == doctest::Approx(0.13196682849657299).epsilon(1e-10));
  CHECK(raw.errors[1] == doctest::Approx(0.02491606300548582).epsilon(1e-9));
  CHECK(raw.errors[2] == doctest::Approx(0.004148878046981171).epsilon(1e-8));
}

TEST_CASE("lebesgue point convergence at a continuity point") {
  const TorusGrid grid(8192);
  const auto f = TorusFunction::indicator(0.0, pi / 2);
  // x = 1.0 lies inside (0, pi/2); the limit is 1.
  const auto rep =
      lebesgue_point_convergence(f, 1.0, 1.0, {8, 64, 512}, grid);
  CHECK(rep.errors[0] > rep.errors[1]);
  CHECK(rep.errors[1] > rep.errors[2]);
  CHECK(rep.errors[2] < 1e-2);
}

TEST_CASE("abel means of sign follow the arctan closed form") {
  const TorusGrid grid(8192);
  const auto f = TorusFunction::sign_function();
  // P_r * sign(pi/2) = (4/pi) atan(r), summing the odd Leibniz-type series.
  const auto rep = norm_convergence_report(
      f, NormMode::at(pi / 2, 1.0), SumMethod::abel, {0.5, 0.9, 0.99}, grid);
  REQUIRE(rep.errors.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    const double r = rep.schedule[i];
    CHECK(rep.errors[i] ==
          doctest::Approx(1.0 - 4.0 / pi * std::atan(r)).epsilon(1e-12));
  }
  CHECK(rep.errors[0] > rep.errors[1]);
  CHECK(rep.errors[1] > rep.errors[2]);
}
