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

// Uniform-grid transforms, backed by FFTW. The grid nodes carry an offset
// of -pi, which shows up as the (-1)^n phase in the helpers below.

#pragma once

#include <vector>

#include "torus/core.hpp"

namespace torus::fft {

// out[k] = sum_j in[j] e^{-2pi i jk/N}  (unnormalized)
std::vector<cplx> dft_forward(const std::vector<cplx>& in);
// out[j] = sum_k in[k] e^{+2pi i jk/N}  (unnormalized)
std::vector<cplx> dft_backward(const std::vector<cplx>& in);

// Quadrature Fourier coefficients of grid samples:
//   a_n = (1/N) sum_j f(x_j) e^{-i n x_j},  |n| <= half_width.
// Requires 2*half_width + 1 <= grid size.
CoefficientSequence coefficients_from_samples(const TorusGrid& grid,
                                              const std::vector<cplx>& samples,
                                              int half_width);

// Samples of sum_n c_n e^{i n x_j} on the grid.
// Requires 2*half_width + 1 <= grid size (no aliasing collisions).
std::vector<cplx> synthesize_on_grid(const TorusGrid& grid,
                                     const CoefficientSequence& c);

// Row-major 2-D transform on an n x n array.
std::vector<cplx> dft2d(const std::vector<cplx>& in, int n, bool forward);

}  // namespace torus::fft
