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

// Core types for analysis on the circle group T = R/2piZ.
//
// Conventions used throughout the library:
//   * angles live in [-pi, pi); reduction is applied on evaluation,
//   * the normalized measure is d-sigma = dx / 2pi,
//   * the uniform grid of even size N has nodes x_j = -pi + 2pi j / N,
//   * grid quadrature is the plain node average, which is the periodic
//     trapezoid rule and is exact for trigonometric polynomials of
//     degree < N/2 (the aliasing threshold).

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace torus {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Thrown when a runtime self-check promised by an operation's contract
// fails (distinct from argument validation, which uses std::invalid_argument
// and std::domain_error).
struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduce an angle to [-pi, pi).
double reduce_angle(double x);

// Absolute/relative tolerance pair. ok(err, scale) accepts err if it is
// within absolute + relative * |scale|.
struct Tolerance {
  double absolute = 1e-10;
  double relative = 0.0;

  bool ok(double err, double scale = 0.0) const {
    return std::abs(err) <= absolute + relative * std::abs(scale);
  }
};

// Uniform grid on T. Size must be even and >= 4.
class TorusGrid {
 public:
  explicit TorusGrid(int size);

  int size() const { return size_; }
  // node(j) = -pi + 2pi j / size, exact at j = size/2 (gives 0).
  double node(int j) const;
  // Largest degree a function may have so that grid quadrature of products
  // of two such functions is still exact: degree <= size/2 - 1.
  int aliasing_threshold() const { return size_ / 2 - 1; }

  bool operator==(const TorusGrid& o) const { return size_ == o.size_; }

 private:
  int size_;
};

// Two-sided coefficient window c_n for |n| <= half_width, stored densely.
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  CoefficientSequence(int half_width, std::vector<cplx> values);
  static CoefficientSequence zeros(int half_width);

  int half_width() const { return half_width_; }
  // Coefficient c_n; n outside the window reads as 0.
  cplx at(int n) const;
  cplx& ref(int n);
  const std::vector<cplx>& values() const { return values_; }

 private:
  int half_width_ = 0;
  std::vector<cplx> values_{cplx(0.0, 0.0)};
};

// A function on T, one of four representations.
class TorusFunction {
 public:
  // Finite sum c_n e^{inx}. Terms are kept sorted by n, one per frequency.
  struct TrigPolynomial {
    std::vector<std::pair<int, cplx>> terms;
  };

  // Piecewise constant on [-pi, pi). breaks[0] == -pi always; value[i]
  // holds on [breaks[i], breaks[i+1]) and values.back() on
  // [breaks.back(), pi). Breaks are strictly increasing.
  struct PiecewiseConstant {
    std::vector<double> breaks;
    std::vector<cplx> values;
  };

  // Named closed form with one real parameter:
  //   "geometric_pole": f(x) = 1 / (1 - r e^{ix}),     0 <= r < 1
  //   "poisson":        P_r(x) = (1-r^2)/(1-2r cos x+r^2), 0 <= r < 1
  struct NamedClosedForm {
    std::string name;
    double r = 0.0;
  };

  // Samples on a uniform grid; evaluation picks the nearest node
  // (no interpolation -- callers align grids).
  struct SampledGrid {
    TorusGrid grid;
    std::vector<cplx> samples;
  };

  using Spec = std::variant<TrigPolynomial, PiecewiseConstant,
                            NamedClosedForm, SampledGrid>;

  explicit TorusFunction(Spec spec);

  // Factories.
  static TorusFunction trig_polynomial(std::vector<std::pair<int, cplx>> terms);
  static TorusFunction from_coefficients(const CoefficientSequence& c);
  static TorusFunction character(int n);            // e^{inx}
  static TorusFunction constant(cplx c);
  // Pieces (from, to, value) must tile [-pi, pi) contiguously.
  static TorusFunction piecewise(
      const std::vector<std::tuple<double, double, cplx>>& pieces);
  static TorusFunction sign_function();             // -1 on (-pi,0), +1 on [0,pi)
  static TorusFunction indicator(double a, double b);
  static TorusFunction named(const std::string& name, double r);
  static TorusFunction sampled(const TorusGrid& grid, std::vector<cplx> samples);

  const Spec& spec() const { return spec_; }
  template <class T>
  const T* as() const { return std::get_if<T>(&spec_); }

  bool is_band_limited() const;
  // Max |n| over nonzero terms; only valid for TrigPolynomial.
  int degree() const;

 private:
  Spec spec_;
};

// A finite complex Borel measure: finitely many atoms plus an optional
// absolutely continuous part f d-sigma.
class TorusMeasure {
 public:
  struct Atom {
    double angle;  // in [-pi, pi)
    cplx mass;
  };

  TorusMeasure() = default;
  // Atoms closer than merge_tol radians are merged (masses added).
  TorusMeasure(std::vector<Atom> atoms, std::optional<TorusFunction> density,
               double merge_tol = 1e-12);

  static TorusMeasure point_mass(double angle, cplx mass);
  static TorusMeasure from_density(TorusFunction f);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<TorusFunction>& density() const { return density_; }

  // Total variation: sum of |atom masses| plus the L1 norm of the density
  // (computed on the supplied grid unless the density has an exact path).
  double total_variation(const TorusGrid& grid) const;

 private:
  std::vector<Atom> atoms_;
  std::optional<TorusFunction> density_;
};

// Pointwise evaluation. The angle is reduced to [-pi, pi) first.
cplx evaluate(const TorusFunction& f, double x);

// Evaluate on every node of the grid. TrigPolynomial synthesis runs through
// the FFT when the degree fits below the aliasing threshold; SampledGrid
// input must live on the same grid.
std::vector<cplx> evaluate_on_grid(const TorusFunction& f,
                                   const TorusGrid& grid);

// L^p(d-sigma) norm, p in [1, inf]. Pass std::numeric_limits::infinity()
// for the sup norm. Exact closed-form paths: PiecewiseConstant (any p) and
// TrigPolynomial at p = 2 (Parseval); everything else uses grid quadrature.
double lp_norm(const TorusFunction& f, double p, const TorusGrid& grid);

// l^q norm of a coefficient window, q in [1, inf].
double lq_sequence_norm(const CoefficientSequence& c, double q);

}  // namespace torus
