// Copyright 2026 The gpqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gpq/state.hpp"

namespace gpq {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  std::size_t max_subdivisions = 4000;

  void validate() const;
};

class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& what, double estimate, double error)
      : NumericalError(what), estimate_(estimate), error_(error) {}
  double estimate() const { return estimate_; }
  double error() const { return error_; }

 private:
  double estimate_;
  double error_;
};

using RealFunction = std::function<double(double)>;

/// Integral of f over [0, inf). The half-line is mapped onto [0, 1) through
/// w = scale * u / (1 - u) and integrated adaptively (Gauss-Kronrod 21).
/// `scale` should sit near the decay scale of f (the bath cutoff).
double integrate_semi_infinite(const RealFunction& f, const QuadratureSpec& spec = {},
                               double scale = 1.0);

/// Adaptive integral of f over [a, b] with optional interior breakpoints
/// where f has kinks or steep transitions.
double integrate_interval(const RealFunction& f, double a, double b,
                          std::span<const double> breakpoints = {},
                          const QuadratureSpec& spec = {});

/// Composite Simpson rule on uniformly spaced samples (odd count >= 3).
double simpson(std::span<const double> values, double step);

struct OdeSpec {
  double step = 0.0;

  /// step = span / steps
  static OdeSpec with_steps(double span, std::size_t steps);
  void validate() const;
};

struct OdeSolution {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

/// Classical fixed-step 4th-order Runge-Kutta from t0 to t1. The step is
/// shrunk so that an integer number of steps lands exactly on t1; every step
/// is recorded. Throws NumericalError naming the time at which a non-finite
/// value first appears.
OdeSolution integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                          const OdeSpec& spec);

}  // namespace gpq
