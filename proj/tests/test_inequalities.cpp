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

#include "torus/inequalities.hpp"
#include "torus/rng.hpp"

using namespace torus;

namespace {

TorusFunction random_poly(uint64_t seed, int degree) {
  Rng rng(seed);
  std::vector<std::pair<int, cplx>> terms;
  for (int n = -degree; n <= degree; ++n)
    terms.push_back({n, rng.gaussian_cplx()});
  return TorusFunction::trig_polynomial(terms);
}

}  // namespace

TEST_CASE("characters saturate hausdorff-young at every exponent") {
  const TorusGrid grid(256);
  const auto chi = TorusFunction::character(3);
  for (double p : {1.0, 1.25, 1.5, 2.0}) {
    const auto rep = hausdorff_young_check(chi, p, grid);
    CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hausdorff-young holds across random trig polynomials") {
  const TorusGrid grid(1024);
  for (int i = 0; i < 24; ++i) {
    const auto f = random_poly(0x1000 + i, 1 + (i % 7));
    for (double p : {1.0, 1.5, 2.0}) {
      const auto rep = hausdorff_young_check(f, p, grid);
      CHECK(rep.lhs <= rep.rhs * (1.0 + 1e-9));
      if (p == 2.0) {
        // Parseval: equality.
        CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("conjugate exponents are wired correctly") {
  const TorusGrid grid(256);
  const auto f = TorusFunction::character(1);
  CHECK(hausdorff_young_check(f, 1.5, grid).q == doctest::Approx(3.0));
  CHECK(hausdorff_young_check(f, 2.0, grid).q == doctest::Approx(2.0));
  CHECK(std::isinf(hausdorff_young_check(f, 1.0, grid).q));
  CHECK_THROWS_AS(hausdorff_young_check(f, 0.5, grid), std::domain_error);
  CHECK_THROWS_AS(hausdorff_young_check(f, 2.5, grid), std::domain_error);
}

TEST_CASE("sign function endpoint values are exact") {
  const TorusGrid grid(4096);
  const auto rep = interpolation_endpoint_report(TorusFunction::sign_function(),
                                                 grid);
  // ||f||_1 = ||f||_2 = 1 exactly (piecewise paths); sup_n |a_n| = 2/pi.
  CHECK(rep.f_l1 == 1.0);
  CHECK(rep.f_l2 == 1.0);
  CHECK(rep.coeff_sup == doctest::Approx(2.0 / pi).epsilon(1e-13));
  CHECK(rep.coeff_sup <= rep.f_l1);
  CHECK(rep.coeff_l2 <= rep.f_l2);
}

TEST_CASE("reversed probe exhibits a ratio above one at p = 4") {
  const TorusGrid grid(1024);
  // 1 + e^{ix}: ||f_hat||_{4/3} = 2^{3/4} while ||f||_4 = 6^{1/4}.
  const auto f = TorusFunction::trig_polynomial(
      {{0, cplx(1, 0)}, {1, cplx(1, 0)}});
  const auto rep = hausdorff_young_reversed_probe(f, 4.0, grid);
  CHECK(rep.lhs == doctest::Approx(std::pow(2.0, 0.75)).epsilon(1e-10));
  CHECK(rep.rhs == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-10));
  CHECK(rep.ratio > 1.07);
  CHECK_THROWS_AS(hausdorff_young_reversed_probe(f, 1.5, grid),
                  std::domain_error);
}

TEST_CASE("dual synthesis recovers coefficients and satisfies the bound") {
  const TorusGrid grid(1024);
  CoefficientSequence c(3, std::vector<cplx>(7));
  c.ref(-3) = cplx(1, 0);
  c.ref(0) = cplx(0.5, -0.5);
  c.ref(2) = cplx(0, 2);
  const auto rep = dual_synthesis(c, 1.5, grid);
  CHECK(rep.recovery_error <= 1e-10);
  CHECK(rep.q == doctest::Approx(3.0));
  CHECK(rep.f_norm_q <= rep.coeff_norm_p * (1.0 + 1e-9));
  // Frozen values for this window.
  CHECK(rep.coeff_norm_p ==
        doctest::Approx(std::pow(1.0 + std::pow(std::sqrt(0.5), 1.5) +
                                     std::pow(2.0, 1.5),
                                 1.0 / 1.5))
            .epsilon(1e-12));
  CHECK_THROWS_AS(dual_synthesis(c, 1.0, grid), std::domain_error);
  CHECK_THROWS_AS(dual_synthesis(c, 2.5, grid), std::domain_error);
}

TEST_CASE("dual synthesis frozen example") {
  const TorusGrid grid(1024);
  // c = (1, 1, 1) on n = -1..1 with p = 2: f has ||f||_2 = sqrt(3) and
  // ||c||_2 = sqrt(3); Parseval makes the bound an equality.
  CoefficientSequence c(1, {cplx(1, 0), cplx(1, 0), cplx(1, 0)});
  const auto rep = dual_synthesis(c, 2.0, grid);
  CHECK(rep.f_norm_q == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(rep.coeff_norm_p == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}
