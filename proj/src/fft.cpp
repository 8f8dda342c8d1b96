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

#include "torus/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace torus::fft {

namespace {

// FFTW's planner mutates shared state; executing a plan is thread safe but
// creating or destroying one is not.
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<cplx> run_1d(const std::vector<cplx>& in, int sign) {
  const int n = static_cast<int>(in.size());
  if (n == 0) throw std::invalid_argument("dft: empty input");
  std::vector<cplx> out(in.size());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(
        n,
        reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
        reinterpret_cast<fftw_complex*>(out.data()), sign,
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<cplx> dft_forward(const std::vector<cplx>& in) {
  return run_1d(in, FFTW_FORWARD);
}

std::vector<cplx> dft_backward(const std::vector<cplx>& in) {
  return run_1d(in, FFTW_BACKWARD);
}

CoefficientSequence coefficients_from_samples(const TorusGrid& grid,
                                              const std::vector<cplx>& samples,
                                              int half_width) {
  const int n = grid.size();
  if (samples.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument(
        "coefficients_from_samples: sample count != grid size");
  if (half_width < 0 || 2 * half_width + 1 > n)
    throw std::invalid_argument(
        "coefficients_from_samples: window exceeds grid resolution");
  std::vector<cplx> spectrum = dft_forward(samples);
  CoefficientSequence c = CoefficientSequence::zeros(half_width);
  for (int k = -half_width; k <= half_width; ++k) {
    int idx = ((k % n) + n) % n;
    // Nodes start at -pi rather than 0, which twists bin k by (-1)^k.
    double phase = (k % 2 == 0) ? 1.0 : -1.0;
    c.ref(k) = phase * spectrum[static_cast<std::size_t>(idx)] /
               static_cast<double>(n);
  }
  return c;
}

std::vector<cplx> synthesize_on_grid(const TorusGrid& grid,
                                     const CoefficientSequence& c) {
  const int n = grid.size();
  if (2 * c.half_width() + 1 > n)
    throw std::invalid_argument(
        "synthesize_on_grid: coefficient window exceeds grid resolution");
  std::vector<cplx> bins(static_cast<std::size_t>(n));
  for (int k = -c.half_width(); k <= c.half_width(); ++k) {
    int idx = ((k % n) + n) % n;
    double phase = (k % 2 == 0) ? 1.0 : -1.0;
    bins[static_cast<std::size_t>(idx)] += phase * c.at(k);
  }
  return dft_backward(bins);
}

std::vector<cplx> dft2d(const std::vector<cplx>& in, int n, bool forward) {
  if (in.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("dft2d: input is not n*n");
  std::vector<cplx> out(in.size());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_2d(
        n, n,
        reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
        reinterpret_cast<fftw_complex*>(out.data()),
        forward ? FFTW_FORWARD : FFTW_BACKWARD,
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace torus::fft
