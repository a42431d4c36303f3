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

#include "gpq/geometric_phase.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "gpq/dissipative.hpp"

namespace gpq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMixedStartTolerance = 1e-6;
constexpr double kMinStepOverlap = 1e-6;
constexpr std::size_t kDiagnosticPoints = 257;

// Leading-eigenvector weights of a Bloch vector with polar component `a` and
// transverse half-length `r` (so the coherence modulus). Returns
// {sin^2(theta_t/2), cos^2(theta_t/2)}, each computed without cancellation.
std::array<double, 2> leading_weights(double a, double r) {
  const double eps = std::hypot(a, 2.0 * r);
  if (eps == 0.0) return {0.5, 0.5};
  if (a >= 0.0) {
    const double c2 = 2.0 * r * r / (eps * (eps + a));
    return {(eps + a) / (2.0 * eps), c2};
  }
  const double s2 = 2.0 * r * r / (eps * (eps - a));
  return {s2, (eps - a) / (2.0 * eps)};
}

double theta_of(double a, double r) {
  const auto w = leading_weights(a, r);
  return 2.0 * std::atan2(std::sqrt(w[0]), std::sqrt(w[1]));
}

// Endpoint geometry of a path that starts at from_angles(theta0, .), ends at
// inversion `a`, coherence modulus (sin(theta0)/2) * unit_mod, and has
// accumulated azimuthal advance `delta`.
struct Endpoint {
  double overlap_arg = 0.0;
  double theta = 0.0;
  double length = 1.0;
  std::string note;
};

Endpoint endpoint(double theta0, double a, double unit_mod, double delta) {
  const double s0 = std::sin(0.5 * theta0);
  const double c0 = std::cos(0.5 * theta0);
  const double r = s0 * c0 * unit_mod;
  Endpoint e;
  e.length = std::hypot(a, 2.0 * r);
  if (e.length == 0.0) {
    throw NumericalError("geometric phase undefined: state is maximally mixed at the end of the cycle");
  }
  e.theta = theta_of(a, r);
  const Complex turn = std::polar(1.0, delta);
  Complex ov;
  if (a >= 0.0) {
    const double n = std::hypot(e.length + a, 2.0 * r);
    ov = c0 * (e.length + a) / n + s0 * (2.0 * r / n) * turn;
  } else {
    // The overlap carries an overall factor s0 here; it is divided out so
    // that the argument keeps its limit as theta0 -> 0.
    const double n = std::hypot(e.length - a, 2.0 * r);
    ov = c0 * 2.0 * c0 * unit_mod / n + (e.length - a) / n * turn;
    e.note = "inversion negative at the end of the cycle";
  }
  if (std::abs(ov) < 1e-14) {
    throw NumericalError("geometric phase undefined: endpoint eigenvectors are orthogonal");
  }
  e.overlap_arg = std::arg(ov);
  return e;
}

void join_note(std::string& note, const std::string& add) {
  if (add.empty()) return;
  if (!note.empty()) note += "; ";
  note += add;
}

struct DissipativeConnection {
  double integral = 0.0;
  double delta = 0.0;
  double a_tau = 0.0;
  double mod_tau = 0.0;
  std::string note;
};

DissipativeConnection dissipative_connection(const DissipativeEvolution& evo,
                                             const QuadratureSpec& quad) {
  const double omega = evo.bath().omega;
  const double tau = evo.bath().period();
  const double s0 = std::sin(0.5 * evo.theta0());
  const double c0 = std::cos(0.5 * evo.theta0());
  const auto integrand = [&](double t) {
    const double r = s0 * c0 * std::abs(evo.unit_coherence(t));
    return (evo.chi_rate(t) + omega) * leading_weights(evo.inversion(t), r)[1];
  };
  std::vector<double> breaks;
  DissipativeConnection out;
  if (const auto tz = evo.inversion_zero(); tz && *tz > 0.0 && *tz < tau) {
    breaks.push_back(*tz);
    out.note = fmt::format("inversion changes sign at t = {:.6g}", *tz);
  }
  out.integral = integrate_interval(integrand, 0.0, tau, breaks, quad);
  out.delta = evo.chi(tau) - evo.chi(0.0) + omega * tau;
  out.a_tau = evo.inversion(tau);
  out.mod_tau = std::abs(evo.unit_coherence(tau));
  return out;
}

void check_theta(double theta0) {
  if (!(theta0 >= 0.0 && theta0 <= kPi)) {
    throw DomainError(fmt::format("theta0 = {} outside [0, pi]", theta0));
  }
}

std::vector<double> uniform_times(double tau, std::size_t intervals) {
  if (intervals < 2) throw DomainError("a trajectory needs at least two intervals");
  std::vector<double> t(intervals + 1);
  for (std::size_t k = 0; k <= intervals; ++k) {
    t[k] = tau * static_cast<double>(k) / static_cast<double>(intervals);
  }
  t.back() = tau;
  return t;
}

}  // namespace

double wrap_phase(double x) {
  if (!std::isfinite(x)) throw NumericalError("non-finite phase");
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

double unitary_gp(double theta0) {
  check_theta(theta0);
  return wrap_phase(-kPi * (1.0 - std::cos(theta0)));
}

double gp_unitary_mixed(double bloch_length, double solid_angle) {
  if (!(bloch_length >= 0.0 && bloch_length <= 1.0)) {
    throw DomainError(fmt::format("Bloch length {} outside [0, 1]", bloch_length));
  }
  if (!(solid_angle >= 0.0 && solid_angle < 4.0 * kPi)) {
    throw DomainError(fmt::format("solid angle {} outside [0, 4 pi)", solid_angle));
  }
  const double h = 0.5 * solid_angle;
  return wrap_phase(-std::atan2(bloch_length * std::sin(h), std::cos(h)));
}

double pancharatnam_phase(std::span<const Vector2> path) {
  if (path.size() < 2) throw DomainError("a vector path needs at least two samples");
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const Complex step = path[k].dot(path[k + 1]);
    if (std::abs(step) < kMinStepOverlap) {
      throw NumericalError(fmt::format("consecutive vectors {} and {} are nearly orthogonal", k, k + 1));
    }
    sum += std::arg(step);
  }
  const Complex ov = path.front().dot(path.back());
  if (std::abs(ov) < 1e-14) throw NumericalError("endpoint vectors are orthogonal");
  return wrap_phase(std::arg(ov) - sum);
}

void Trajectory::validate() const {
  if (times.size() != states.size()) {
    throw DomainError(fmt::format("trajectory has {} times but {} states", times.size(),
                                  states.size()));
  }
  if (times.size() < 2) throw DomainError("trajectory needs at least two samples");
  if (times.front() != 0.0) throw DomainError("trajectory must start at t = 0");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      throw DomainError(fmt::format("trajectory times not increasing at index {}", k));
    }
  }
}

GpResult gp_from_trajectory(const Trajectory& traj) {
  traj.validate();
  const Eigensystem first = eigensystem(traj.states.front());
  if (first.degenerate || first.lower.value > kMixedStartTolerance) {
    throw DomainError(fmt::format(
        "initial state is mixed (smaller eigenvalue {:.3e}); only pure starts are supported",
        first.lower.value));
  }
  GpResult res;
  res.times = traj.times;
  std::vector<Vector2> path;
  path.reserve(traj.states.size());
  Eigensystem last = first;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const Eigensystem es = k == 0 ? first : eigensystem(traj.states[k]);
    if (es.degenerate) {
      throw NumericalError(
          fmt::format("degenerate spectrum along the path at t = {:.9g}", traj.times[k]));
    }
    const Vector2& v = es.upper.vector;
    if (k > 0 && std::abs(path.back().dot(v)) < kMinStepOverlap) {
      throw NumericalError(fmt::format(
          "leading eigenvector jumps between t = {:.9g} and t = {:.9g}", traj.times[k - 1],
          traj.times[k]));
    }
    path.push_back(v);
    res.theta_t.push_back(2.0 * std::atan2(std::abs(v(0)), std::abs(v(1))));
    res.chi_t.push_back(std::arg(v(1) * std::conj(v(0))));
    last = es;
  }
  res.phase = pancharatnam_phase(path);
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) sum += std::arg(path[k].dot(path[k + 1]));
  res.connection_integral = sum;
  res.overlap_arg = std::arg(path.front().dot(path.back()));
  res.lambda_tau = last.upper.value;
  res.bloch_length_tau = last.upper.value - last.lower.value;
  res.theta_tau = res.theta_t.back();
  return res;
}

GpResult gp_qnd_closed(double theta0, const GammaTable& gamma) {
  check_theta(theta0);
  const double omega = gamma.bath().omega;
  const double a = std::cos(theta0);
  const double sc = std::sin(0.5 * theta0) * std::cos(0.5 * theta0);
  const std::size_t n = gamma.intervals() + 1;

  GpResult res;
  res.times.resize(n);
  res.theta_t.resize(n);
  res.chi_t.assign(n, 0.0);
  std::vector<double> f(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double r = sc * std::exp(-omega * omega * gamma.gamma(k));
    res.times[k] = gamma.time(k);
    res.theta_t[k] = theta_of(a, r);
    f[k] = omega * leading_weights(a, r)[1];
  }
  const std::size_t m = gamma.intervals();
  if (m % 2 == 0) {
    res.connection_integral = simpson(f, gamma.step());
  } else {
    // Odd interval count: Simpson on the first m - 3 intervals, 3/8 rule on the rest.
    const double h = gamma.step();
    const std::span<const double> head(f.data(), m - 2);
    res.connection_integral =
        (m > 3 ? simpson(head, h) : 0.0) +
        3.0 * h / 8.0 * (f[m - 3] + 3.0 * f[m - 2] + 3.0 * f[m - 1] + f[m]);
  }
  const double mod_tau = std::exp(-omega * omega * gamma.gamma(m));
  const Endpoint e = endpoint(theta0, a, mod_tau, omega * gamma.time(m));
  res.overlap_arg = e.overlap_arg;
  res.theta_tau = e.theta;
  res.bloch_length_tau = e.length;
  res.lambda_tau = 0.5 * (1.0 + e.length);
  res.branch_note = e.note;
  res.phase = wrap_phase(res.overlap_arg - res.connection_integral);
  return res;
}

GpResult gp_qnd_closed(double theta0, const BathSpec& bath, const QuadratureSpec& quad,
                       std::size_t intervals) {
  return gp_qnd_closed(theta0, GammaTable(bath, intervals, quad));
}

GpResult gp_dissipative_closed(double theta0, double phi0, const BathSpec& bath,
                               const QuadratureSpec& quad) {
  check_theta(theta0);
  const DissipativeEvolution evo(theta0, phi0, bath);
  const DissipativeConnection conn = dissipative_connection(evo, quad);

  GpResult res;
  res.times = uniform_times(bath.period(), kDiagnosticPoints - 1);
  const double s0 = std::sin(0.5 * theta0);
  const double c0 = std::cos(0.5 * theta0);
  for (double t : res.times) {
    res.theta_t.push_back(theta_of(evo.inversion(t), s0 * c0 * std::abs(evo.unit_coherence(t))));
    res.chi_t.push_back(evo.chi(t));
  }
  const Endpoint e = endpoint(theta0, conn.a_tau, conn.mod_tau, conn.delta);
  res.connection_integral = conn.integral;
  res.overlap_arg = e.overlap_arg;
  res.theta_tau = e.theta;
  res.bloch_length_tau = e.length;
  res.lambda_tau = 0.5 * (1.0 + e.length);
  res.branch_note = conn.note;
  join_note(res.branch_note, e.note);
  res.phase = wrap_phase(res.overlap_arg - res.connection_integral);
  return res;
}

double gp_dissipative_expanded(double theta0, double phi0, const BathSpec& bath,
                               const QuadratureSpec& quad) {
  check_theta(theta0);
  const DissipativeEvolution evo(theta0, phi0, bath);
  const DissipativeConnection conn = dissipative_connection(evo, quad);
  const double s0 = std::sin(0.5 * theta0);
  const double c0 = std::cos(0.5 * theta0);
  const auto w = leading_weights(conn.a_tau, s0 * c0 * conn.mod_tau);
  const double sin_tau = std::sqrt(w[0]);
  const double cos_tau = std::sqrt(w[1]);
  const double im = std::sin(conn.delta) * s0 * cos_tau;
  const double re = std::cos(conn.delta) * s0 * cos_tau + c0 * sin_tau;
  return wrap_phase(std::atan2(im, re) - conn.integral);
}

Trajectory unitary_trajectory(double theta0, double phi0, double omega, std::size_t samples) {
  if (!(omega > 0.0)) throw DomainError(fmt::format("omega = {} must be positive", omega));
  Trajectory traj;
  traj.times = uniform_times(2.0 * kPi / omega, samples);
  for (double t : traj.times) traj.states.push_back(qnd_state_from_gamma(t, theta0, phi0, omega, 0.0));
  return traj;
}

Trajectory qnd_trajectory(double theta0, double phi0, const GammaTable& gamma) {
  Trajectory traj;
  const double omega = gamma.bath().omega;
  const std::size_t n = gamma.intervals() + 1;
  for (std::size_t k = 0; k < n; ++k) {
    traj.times.push_back(k + 1 == n ? gamma.bath().period() : gamma.time(k));
    traj.states.push_back(qnd_state_from_gamma(traj.times.back(), theta0, phi0, omega,
                                               gamma.gamma(k)));
  }
  return traj;
}

Trajectory qnd_trajectory(double theta0, double phi0, const BathSpec& bath, std::size_t samples,
                          const QuadratureSpec& quad) {
  return qnd_trajectory(theta0, phi0, GammaTable(bath, samples, quad));
}

Trajectory dissipative_trajectory(double theta0, double phi0, const BathSpec& bath,
                                  std::size_t samples) {
  const DissipativeEvolution evo(theta0, phi0, bath);
  Trajectory traj;
  traj.times = uniform_times(bath.period(), samples);
  for (double t : traj.times) traj.states.push_back(evo.schrodinger_state(t));
  return traj;
}

Trajectory dissipative_trajectory_rk4(double theta0, double phi0, const BathSpec& bath,
                                      std::size_t samples) {
  if (samples < 2) throw DomainError("a trajectory needs at least two intervals");
  const double tau = bath.period();
  const LindbladTrajectory sol =
      integrate_lindblad(theta0, phi0, bath, tau, OdeSpec::with_steps(tau, samples));
  const StateTolerance tol{1e-9, 1e-9, 1e-9};
  Trajectory traj;
  traj.times = sol.times;
  for (std::size_t k = 0; k < sol.states.size(); ++k) {
    Matrix2 rho = sol.states[k];
    rho(0, 1) *= std::polar(1.0, -bath.omega * sol.times[k]);
    rho(1, 0) = std::conj(rho(0, 1));
    traj.states.push_back(QubitState::from_matrix(rho, tol));
  }
  return traj;
}

}  // namespace gpq
