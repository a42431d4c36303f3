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

#include "gpq/dephasing.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace gpq {

void BathSpec::validate() const {
  auto require = [](bool ok, const char* what, double v) {
    if (!ok) throw DomainError(fmt::format("invalid bath parameter: {} = {}", what, v));
  };
  require(omega > 0.0 && std::isfinite(omega), "omega", omega);
  require(omega_c > 0.0 && std::isfinite(omega_c), "omega_c", omega_c);
  require(gamma0 >= 0.0 && std::isfinite(gamma0), "gamma0", gamma0);
  require(temperature >= 0.0 && std::isfinite(temperature), "temperature", temperature);
  require(squeeze_r >= 0.0 && std::isfinite(squeeze_r), "squeeze_r", squeeze_r);
  require(std::isfinite(squeeze_a), "squeeze_a", squeeze_a);
  require(std::isfinite(squeeze_phi), "squeeze_phi", squeeze_phi);
}

double gamma_qnd(double t, const BathSpec& bath, const QuadratureSpec& quad) {
  bath.validate();
  if (!(t >= 0.0)) throw DomainError(fmt::format("gamma_qnd: negative time {}", t));
  if (t == 0.0 || bath.gamma0 == 0.0) return 0.0;

  const double ch = std::cosh(2.0 * bath.squeeze_r);
  const double sh = std::sinh(2.0 * bath.squeeze_r);
  const double wc = bath.omega_c;
  const double temp = bath.temperature;
  const double shift = t - 2.0 * bath.squeeze_a;

  const auto integrand = [&](double w) {
    if (w <= 0.0) return 0.0;
    const double damp = std::exp(-w / wc);
    if (damp == 0.0) return 0.0;
    const double s = std::sin(0.5 * w * t);
    double kernel = 4.0 * s * s / w;
    if (temp > 0.0) kernel /= std::tanh(0.5 * w / temp);
    return damp * kernel * (ch - sh * std::cos(w * shift));
  };
  const double integral = integrate_semi_infinite(integrand, quad, wc);
  return bath.gamma0 / (2.0 * std::numbers::pi) * integral;
}

double eta_qnd(double t, const BathSpec& bath) {
  bath.validate();
  if (!(t >= 0.0)) throw DomainError(fmt::format("eta_qnd: negative time {}", t));
  return -bath.gamma0 / std::numbers::pi * std::atan(bath.omega_c * t);
}

DephasingSample dephasing_sample(double t, const BathSpec& bath, const QuadratureSpec& quad) {
  DephasingSample s;
  s.t = t;
  s.gamma = gamma_qnd(t, bath, quad);
  s.eta = eta_qnd(t, bath);
  s.lambda = -std::expm1(-2.0 * bath.omega * bath.omega * s.gamma);
  s.beta = bath.omega * t;
  return s;
}

GammaTable::GammaTable(const BathSpec& bath, std::size_t intervals, const QuadratureSpec& quad)
    : bath_(bath) {
  bath.validate();
  if (intervals < 2) throw DomainError("GammaTable needs at least two intervals");
  step_ = bath.period() / static_cast<double>(intervals);
  gamma_.resize(intervals + 1);
  gamma_[0] = 0.0;
  for (std::size_t k = 1; k <= intervals; ++k) gamma_[k] = gamma_qnd(time(k), bath, quad);
}

GammaTable GammaTable::zero(const BathSpec& bath, std::size_t intervals) {
  bath.validate();
  if (intervals < 2) throw DomainError("GammaTable needs at least two intervals");
  GammaTable table;
  table.bath_ = bath;
  table.step_ = bath.period() / static_cast<double>(intervals);
  table.gamma_.assign(intervals + 1, 0.0);
  return table;
}

QubitState qnd_state_from_gamma(double t, double theta0, double phi0, double omega, double gamma) {
  const QubitState initial = QubitState::from_angles(theta0, phi0);
  Matrix2 rho = initial.matrix();
  const Complex decay = std::polar(std::exp(-omega * omega * gamma), -omega * t);
  rho(0, 1) *= decay;
  rho(1, 0) = std::conj(rho(0, 1));
  return QubitState::from_matrix(rho);
}

QubitState qnd_state(double t, double theta0, double phi0, const BathSpec& bath,
                     const QuadratureSpec& quad) {
  return qnd_state_from_gamma(t, theta0, phi0, bath.omega, gamma_qnd(t, bath, quad));
}

KrausSet phase_damping_kraus(double lambda, double beta) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError(fmt::format("phase damping strength {} outside [0, 1]", lambda));
  }
  Matrix2 e0 = Matrix2::Zero();
  Matrix2 e1 = Matrix2::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::polar(std::sqrt(1.0 - lambda), beta);
  e1(1, 1) = std::sqrt(lambda);
  return KrausSet({e0, e1});
}

KrausSet phase_damping_kraus(double t, const BathSpec& bath, const QuadratureSpec& quad) {
  const DephasingSample s = dephasing_sample(t, bath, quad);
  return phase_damping_kraus(s.lambda, s.beta);
}

}  // namespace gpq
