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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "gpq/numerics.hpp"
#include "test_support.hpp"

using namespace gpq;
using gpq::testing::kPi;

TEST_CASE("semi-infinite quadrature on closed-form integrals") {
  CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }) ==
        doctest::Approx(1.0).epsilon(1e-11));
  CHECK(integrate_semi_infinite([](double x) { return x * std::exp(-x * x); }) ==
        doctest::Approx(0.5).epsilon(1e-11));
  // int_0^inf e^{-x/c} (1 - cos(a x)) / x dx = ln(1 + a^2 c^2) / 2
  for (double a : {0.1, 1.0, 6.0}) {
    const double c = 40.0;
    const double got = integrate_semi_infinite(
        [&](double x) { return x == 0.0 ? 0.0 : std::exp(-x / c) * (1.0 - std::cos(a * x)) / x; }, {}, c);
    CHECK(got == doctest::Approx(0.5 * std::log1p(a * a * c * c)).epsilon(1e-9));
  }
  // int_0^inf e^{-x/c} sin(a x) / x dx = atan(a c)
  const double got = integrate_semi_infinite(
      [](double x) { return x == 0.0 ? 3.0 : std::exp(-x / 40.0) * std::sin(3.0 * x) / x; }, {}, 40.0);
  CHECK(got == doctest::Approx(std::atan(120.0)).epsilon(1e-9));
}

TEST_CASE("interval quadrature honours breakpoints") {
  const std::vector<double> br{1.0};
  CHECK(integrate_interval([](double x) { return std::abs(x - 1.0); }, 0.0, 2.0, br) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_interval([](double x) { return x < 0.3 ? 0.0 : 1.0; }, 0.0, 1.0,
                           std::vector<double>{0.3}) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(integrate_interval([](double x) { return std::sin(x); }, 0.0, kPi) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("quadrature reports non-convergence and bad specs") {
  QuadratureSpec bad;
  bad.rel_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  QuadratureSpec tight;
  tight.max_subdivisions = 2;
  tight.rel_tol = 1e-14;
  tight.abs_tol = 0.0;
  CHECK_THROWS_AS(integrate_interval([](double x) { return std::sin(200.0 * x) * std::sqrt(x); }, 0.0, 10.0,
                                     {}, tight),
                  QuadratureError);
  CHECK_THROWS_AS(integrate_interval([](double) { return std::nan(""); }, 0.0, 1.0), NumericalError);
}

TEST_CASE("Simpson is exact on cubics") {
  std::vector<double> v;
  const double h = 0.1;
  for (int k = 0; k <= 20; ++k) {
    const double x = k * h;
    v.push_back(x * x * x - 2.0 * x + 1.0);
  }
  CHECK(simpson(v, h) == doctest::Approx(4.0 - 4.0 + 2.0).epsilon(1e-13));
  v.pop_back();
  CHECK_THROWS_AS(simpson(v, h), DomainError);
}

namespace {

double decay_error(double h) {
  const OdeRhs rhs = [](double, const std::vector<double>& y, std::vector<double>& d) { d = {-y[0]}; };
  const OdeSolution sol = integrate_ode(rhs, {1.0}, 0.0, 1.0, OdeSpec{h});
  return std::abs(sol.states.back()[0] - std::exp(-1.0));
}

}  // namespace

TEST_CASE("RK4 reproduces exponential decay") {
  CHECK(decay_error(1e-3) < 1e-13);
  const OdeRhs rhs = [](double t, const std::vector<double>& y, std::vector<double>& d) {
    d = {y[1], -y[0] + 0.0 * t};
  };
  const OdeSolution sol = integrate_ode(rhs, {0.0, 1.0}, 0.0, 2.0 * kPi, OdeSpec::with_steps(2.0 * kPi, 1000));
  CHECK(sol.times.size() == 1001);
  CHECK(sol.times.back() == 2.0 * kPi);
  CHECK(std::abs(sol.states.back()[0]) < 1e-10);
  CHECK(std::abs(sol.states.back()[1] - 1.0) < 1e-10);
}

TEST_CASE("property: RK4 converges at fourth order") {
  // Error ratio under step halving approaches 2^4.
  for (double h : {0.2, 0.1, 0.05}) {
    const double ratio = decay_error(h) / decay_error(h / 2.0);
    CHECK(ratio > 14.5);
    CHECK(ratio < 17.5);
  }
}

TEST_CASE("RK4 names the time of a blow-up") {
  const OdeRhs rhs = [](double, const std::vector<double>& y, std::vector<double>& d) { d = {y[0] * y[0]}; };
  try {
    integrate_ode(rhs, {1.0}, 0.0, 2.0, OdeSpec{1e-3});
    FAIL("expected a NumericalError");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()).find("t =") != std::string::npos);
  }
  CHECK_THROWS_AS(integrate_ode(rhs, {1.0}, 0.0, 1.0, OdeSpec{0.0}), DomainError);
}
