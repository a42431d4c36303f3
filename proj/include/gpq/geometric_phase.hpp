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
#include <span>
#include <string>
#include <vector>

#include "gpq/bath.hpp"
#include "gpq/dephasing.hpp"
#include "gpq/numerics.hpp"
#include "gpq/state.hpp"

namespace gpq {

inline constexpr std::size_t kDefaultTrajectorySamples = 2048;

/// Sampled density-matrix path. times[0] == 0, strictly increasing.
struct Trajectory {
  std::vector<double> times;
  std::vector<QubitState> states;

  void validate() const;
};

/// Mixed-state geometric phase over one quasi-cycle together with the
/// pieces it is assembled from.
struct GpResult {
  double phase = 0.0;                ///< in (-pi, pi]
  double connection_integral = 0.0;  ///< int Im<psi|d psi>, or the discrete sum of step arguments
  double overlap_arg = 0.0;          ///< arg of the endpoint overlap
  std::vector<double> times;         ///< diagnostic sample times
  std::vector<double> theta_t;       ///< polar angle of the leading eigenvector
  std::vector<double> chi_t;         ///< azimuthal phase of the coherence
  double lambda_tau = 1.0;           ///< leading eigenvalue at the end
  double theta_tau = 0.0;
  double bloch_length_tau = 1.0;
  std::string branch_note;
};

/// Wraps into (-pi, pi].
double wrap_phase(double x);

/// Pure-state unitary reference -pi (1 - cos theta0), wrapped.
double unitary_gp(double theta0);

/// Unitary GP of a mixed state of Bloch length L whose direction sweeps the
/// solid angle omega: -atan(L tan(omega / 2)), taken on the branch that
/// gives -omega / 2 at L == 1.
double gp_unitary_mixed(double bloch_length, double solid_angle);

/// arg <v_0|v_N> - sum_k arg <v_k|v_k+1> over a sampled vector path, wrapped.
/// Invariant under v_k -> e^{i f_k} v_k. Throws NumericalError when two
/// consecutive vectors are nearly orthogonal.
double pancharatnam_phase(std::span<const Vector2> path);

/// Discrete (Pancharatnam) evaluation from a sampled trajectory that starts
/// in a pure state:
///   arg <psi(0)|psi(tau)> - sum_k arg <psi(t_k)|psi(t_k+1)>
/// for the leading eigenvector. Throws NumericalError on a degenerate
/// spectrum along the path or an unresolved step, DomainError on a mixed
/// start.
GpResult gp_from_trajectory(const Trajectory& traj);

/// Dephasing-sector closed form on the grid of a precomputed gamma table
/// (connection integral by composite Simpson over the table).
GpResult gp_qnd_closed(double theta0, const GammaTable& gamma);
GpResult gp_qnd_closed(double theta0, const BathSpec& bath, const QuadratureSpec& quad = {},
                       std::size_t intervals = kDefaultTrajectorySamples);

/// Dissipative-sector closed form from the analytic Bloch solution. The
/// connection integral is adaptive, split where <sigma_3> changes sign.
GpResult gp_dissipative_closed(double theta0, double phi0, const BathSpec& bath,
                               const QuadratureSpec& quad = {});

/// The same phase assembled as atan2(Im, Re) of the unnormalized overlap
/// minus the connection integral, without the pole-safe factorization.
double gp_dissipative_expanded(double theta0, double phi0, const BathSpec& bath,
                               const QuadratureSpec& quad = {});

/// Uniformly sampled quasi-cycle paths (samples intervals, samples + 1 states).
Trajectory unitary_trajectory(double theta0, double phi0, double omega,
                              std::size_t samples = kDefaultTrajectorySamples);
Trajectory qnd_trajectory(double theta0, double phi0, const GammaTable& gamma);
Trajectory qnd_trajectory(double theta0, double phi0, const BathSpec& bath,
                          std::size_t samples = kDefaultTrajectorySamples,
                          const QuadratureSpec& quad = {});
Trajectory dissipative_trajectory(double theta0, double phi0, const BathSpec& bath,
                                  std::size_t samples = kDefaultTrajectorySamples);
/// RK4 integration of the master equation, one step per sample interval.
Trajectory dissipative_trajectory_rk4(double theta0, double phi0, const BathSpec& bath,
                                      std::size_t samples = kDefaultTrajectorySamples);

}  // namespace gpq
