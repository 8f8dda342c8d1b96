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

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace torus::detail {

// Kahan compensated accumulator; error is O(eps * sum |terms|) independent
// of the term count.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;

  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

struct KahanSumC {
  KahanSum re, im;

  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
// the Legendre recurrence. Deterministic; cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(
    int order);

// Integrate f over [a, b] with one Gauss-Legendre panel of the given order.
double gauss_panel(const std::function<double(double)>& f, double a, double b,
                   int order);

// Run fn(i) for i in [0, n). Honors the TORUS_HARMONICS_THREADS environment
// variable (default: hardware concurrency capped at 8). Each index writes
// only its own outputs, so results do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace torus::detail
