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

// Deterministic random streams. Standard-library distributions are avoided
// on purpose: their sequences are implementation-defined, and identical
// seeds must reproduce identical output everywhere.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace torus {

// splitmix64 step (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based draw: a pure function of (seed, counter). Splittable streams
// for Monte Carlo sweeps -- sample i never depends on sample j.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t s = seed ^ (counter * 0xd1b54a32d192ed03ULL);
  return splitmix64(s);
}

// Uniform in [0, 1), 53 random bits.
inline double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform_at(std::uint64_t seed, std::uint64_t counter) {
  return to_unit(counter_hash(seed, counter));
}

// Sequential stream with explicit transforms (Box-Muller for gaussians).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }
  double uniform01() { return to_unit(next_u64()); }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = uniform01();
    double m = std::sqrt(-2.0 * std::log(u1));
    spare_ = m * std::sin(6.28318530717958647692 * u2);
    have_spare_ = true;
    return m * std::cos(6.28318530717958647692 * u2);
  }

  std::complex<double> gaussian_cplx() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace torus
