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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpq/dephasing.hpp"
#include "gpq/dissipative.hpp"
#include "gpq/geometric_phase.hpp"
#include "gpq/state.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

gpq::BathSpec make_bath(double gamma0, double temp, double squeeze_r, double squeeze_a,
                        double squeeze_phi, double omega, double omega_c) {
  gpq::BathSpec b;
  b.gamma0 = gamma0;
  b.temperature = temp;
  b.squeeze_r = squeeze_r;
  b.squeeze_a = squeeze_a;
  b.squeeze_phi = squeeze_phi;
  b.omega = omega;
  b.omega_c = omega_c;
  b.validate();
  return b;
}

py::dict gp_dict(const gpq::GpResult& r) {
  return py::dict("phase"_a = r.phase, "connection_integral"_a = r.connection_integral,
                  "overlap_arg"_a = r.overlap_arg, "times"_a = r.times, "theta_t"_a = r.theta_t,
                  "chi_t"_a = r.chi_t, "lambda_tau"_a = r.lambda_tau, "theta_tau"_a = r.theta_tau,
                  "bloch_length_tau"_a = r.bloch_length_tau, "branch_note"_a = r.branch_note);
}

std::vector<gpq::Matrix2> matrices(const gpq::Trajectory& t) {
  std::vector<gpq::Matrix2> out;
  for (const auto& s : t.states) out.push_back(s.matrix());
  return out;
}

gpq::Trajectory from_matrices(const std::vector<double>& times, const std::vector<gpq::Matrix2>& rhos) {
  gpq::Trajectory t;
  t.times = times;
  for (const auto& r : rhos) t.states.push_back(gpq::QubitState::from_matrix(r));
  return t;
}

}  // namespace

PYBIND11_MODULE(_gpqubit, m) {
  m.doc() = "Geometric phase of a qubit coupled to a squeezed thermal bath.";

  py::class_<gpq::BathSpec>(m, "Bath")
      .def(py::init(&make_bath), "gamma0"_a = 0.0, "temp"_a = 0.0, "squeeze_r"_a = 0.0,
           "squeeze_a"_a = 0.0, "squeeze_phi"_a = 0.0, "omega"_a = 1.0, "omega_c"_a = 40.0)
      .def_readwrite("gamma0", &gpq::BathSpec::gamma0)
      .def_readwrite("temp", &gpq::BathSpec::temperature)
      .def_readwrite("squeeze_r", &gpq::BathSpec::squeeze_r)
      .def_readwrite("squeeze_a", &gpq::BathSpec::squeeze_a)
      .def_readwrite("squeeze_phi", &gpq::BathSpec::squeeze_phi)
      .def_readwrite("omega", &gpq::BathSpec::omega)
      .def_readwrite("omega_c", &gpq::BathSpec::omega_c)
      .def_property_readonly("period", &gpq::BathSpec::period)
      .def("__repr__", [](const gpq::BathSpec& b) {
        return py::str("Bath(gamma0={}, temp={}, squeeze_r={}, squeeze_a={}, squeeze_phi={}, "
                       "omega={}, omega_c={})")
            .format(b.gamma0, b.temperature, b.squeeze_r, b.squeeze_a, b.squeeze_phi, b.omega,
                    b.omega_c);
      });

  m.def("initial_state", [](double theta0, double phi0) {
    return gpq::QubitState::from_angles(theta0, phi0).matrix();
  }, "theta0"_a, "phi0"_a = 0.0);

  m.def("apply_kraus", [](const gpq::Matrix2& rho, const std::vector<gpq::Matrix2>& ops) {
    return gpq::apply_kraus(gpq::QubitState::from_matrix(rho), gpq::KrausSet(ops)).matrix();
  }, "rho"_a, "kraus"_a);

  m.def("gamma_qnd", [](double t, const gpq::BathSpec& b) { return gpq::gamma_qnd(t, b); },
        "t"_a, "bath"_a);
  m.def("qnd_state", [](double t, double theta0, double phi0, const gpq::BathSpec& b) {
    return gpq::qnd_state(t, theta0, phi0, b).matrix();
  }, "t"_a, "theta0"_a, "phi0"_a, "bath"_a);
  m.def("phase_damping_kraus", [](double t, const gpq::BathSpec& b) {
    const auto k = gpq::phase_damping_kraus(t, b);
    return std::vector<gpq::Matrix2>(k.ops().begin(), k.ops().end());
  }, "t"_a, "bath"_a);

  m.def("dissipative_state", [](double t, double theta0, double phi0, const gpq::BathSpec& b) {
    return gpq::bloch_solution(t, theta0, phi0, b).state.matrix();
  }, "t"_a, "theta0"_a, "phi0"_a, "bath"_a, "Schroedinger-picture closed-form state.");
  m.def("dissipative_interaction_state", [](double t, double theta0, double phi0, const gpq::BathSpec& b) {
    return gpq::DissipativeEvolution(theta0, phi0, b).interaction_state(t).matrix();
  }, "t"_a, "theta0"_a, "phi0"_a, "bath"_a);
  m.def("excited_sign_change_time", &gpq::excited_sign_change_time, "bath"_a);

  m.def("sgad_channel", [](double t, const gpq::BathSpec& b) {
    const auto ch = gpq::sgad_channel(t, b);
    const auto& p = ch.params;
    return py::dict("p1"_a = p.p1, "p2"_a = p.p2, "alpha"_a = p.alpha, "mu"_a = p.mu, "nu"_a = p.nu,
                    "phi"_a = p.phi, "roots"_a = p.roots,
                    "reproduction_residual"_a = p.reproduction_residual, "note"_a = p.note,
                    "kraus"_a = std::vector<gpq::Matrix2>(ch.kraus.ops().begin(), ch.kraus.ops().end()));
  }, "t"_a, "bath"_a);

  m.def("unitary_gp", &gpq::unitary_gp, "theta0"_a);
  m.def("gp_unitary_mixed", &gpq::gp_unitary_mixed, "bloch_length"_a, "solid_angle"_a);
  m.def("wrap_phase", &gpq::wrap_phase, "x"_a);

  m.def("gp_qnd", [](double theta0, const gpq::BathSpec& b, std::size_t intervals) {
    return gp_dict(gpq::gp_qnd_closed(theta0, b, {}, intervals));
  }, "theta0"_a, "bath"_a, "intervals"_a = gpq::kDefaultTrajectorySamples);
  m.def("gp_dissipative", [](double theta0, double phi0, const gpq::BathSpec& b) {
    return gp_dict(gpq::gp_dissipative_closed(theta0, phi0, b));
  }, "theta0"_a, "phi0"_a, "bath"_a);
  m.def("gp_trajectory", [](const std::vector<double>& times, const std::vector<gpq::Matrix2>& rhos) {
    return gp_dict(gpq::gp_from_trajectory(from_matrices(times, rhos)));
  }, "times"_a, "states"_a, "Discrete geometric phase of a sampled density-matrix path.");

  m.def("dissipative_trajectory", [](double theta0, double phi0, const gpq::BathSpec& b,
                                     std::size_t samples, bool rk4) {
    const auto t = rk4 ? gpq::dissipative_trajectory_rk4(theta0, phi0, b, samples)
                       : gpq::dissipative_trajectory(theta0, phi0, b, samples);
    return py::make_tuple(t.times, matrices(t));
  }, "theta0"_a, "phi0"_a, "bath"_a, "samples"_a = gpq::kDefaultTrajectorySamples, "rk4"_a = false);
  m.def("qnd_trajectory", [](double theta0, double phi0, const gpq::BathSpec& b, std::size_t samples) {
    const auto t = gpq::qnd_trajectory(theta0, phi0, b, samples);
    return py::make_tuple(t.times, matrices(t));
  }, "theta0"_a, "phi0"_a, "bath"_a, "samples"_a = gpq::kDefaultTrajectorySamples);
}
