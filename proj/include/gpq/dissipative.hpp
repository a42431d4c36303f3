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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpq/bath.hpp"
#include "gpq/numerics.hpp"
#include "gpq/state.hpp"

namespace gpq {

/// Photon-number and squeezing coefficients of a squeezed thermal bath at
/// the qubit frequency.
struct SqueezedBathCoeffs {
  double n_th = 0.0;    ///< Planck occupation 1 / (e^{w/T} - 1)
  double n_eff = 0.0;   ///< N = N_th (cosh^2 r + sinh^2 r) + sinh^2 r
  Complex m;            ///< M = -1/2 sinh(2r) e^{i Phi} (2 N_th + 1)
  double a_rate = 0.0;  ///< a = sinh(2r) (2 N_th + 1) = 2 |M|
  double squeeze_r = 0.0;
  double squeeze_phi = 0.0;

  static SqueezedBathCoeffs from(const BathSpec& bath);
};

/// Interaction-picture generator
///   g0 (N+1) D[s-] + g0 N D[s+] - g0 M s+ rho s+ - g0 M* s- rho s-
/// with D[L] rho = L rho L^dag - {L^dag L, rho} / 2.
Matrix2 lindblad_rhs(const Matrix2& rho, const SqueezedBathCoeffs& coeffs, double gamma0);

/// The same generator written as sum_j (2 R_j rho R_j^dag - {R_j^dag R_j, rho})
/// with R = s- cosh r + e^{i Phi} s+ sinh r, R_1 = sqrt(g0 (N_th+1)/2) R,
/// R_2 = sqrt(g0 N_th / 2) R^dag.
std::vector<Matrix2> lindblad_operators(const SqueezedBathCoeffs& coeffs, double gamma0);
Matrix2 lindblad_form_rhs(const Matrix2& rho, std::span<const Matrix2> ops);

/// Largest elementwise deviation between the two forms over `trials` random
/// density matrices.
double lindblad_form_check(const SqueezedBathCoeffs& coeffs, double gamma0, std::uint64_t seed,
                           int trials = 32);

/// Closed-form Bloch data at one time.
struct BlochSample {
  double t = 0.0;
  double inversion = 0.0;  ///< A(t) = <sigma_3>
  Complex coherence;       ///< B(t) = <sigma_-> = rho(0, 1), interaction picture
  double radius = 0.0;     ///< R = |B|
  double chi = 0.0;        ///< B = R e^{-i chi}, continuous with chi(0) = phi0
  double chi_rate = 0.0;   ///< d chi / dt
};

/// Closed-form solution of the dissipative master equation for the initial
/// state from_angles(theta0, phi0). The coherence is carried as
/// B(t) = (sin(theta0) / 2) b(t) with b independent of theta0, so that chi
/// stays defined at the poles theta0 = 0, pi (limit from inside the sphere).
class DissipativeEvolution {
 public:
  DissipativeEvolution(double theta0, double phi0, const BathSpec& bath);

  double theta0() const { return theta0_; }
  double phi0() const { return phi0_; }
  const BathSpec& bath() const { return bath_; }
  const SqueezedBathCoeffs& coeffs() const { return coeffs_; }

  double inversion(double t) const;
  /// d A / dt
  double inversion_rate(double t) const;
  Complex coherence(double t) const;
  /// b(t) = B(t) / (sin(theta0) / 2).
  Complex unit_coherence(double t) const;
  double chi(double t) const;
  double chi_rate(double t) const;
  BlochSample sample(double t) const;

  QubitState interaction_state(double t) const;
  /// Interaction-picture state dressed with the free e^{-/+ i w t} phases.
  QubitState schrodinger_state(double t) const;

  /// Time at which A(t) changes sign, if it ever does.
  std::optional<double> inversion_zero() const;

 private:
  double theta0_;
  double phi0_;
  BathSpec bath_;
  SqueezedBathCoeffs coeffs_;
  double relax_ = 0.0;   // g0 (2N + 1)
  double kappa_ = 0.0;   // g0 a / 2
};

struct BlochSolution {
  BlochSample sample;
  QubitState state;  ///< Schroedinger picture
};

BlochSolution bloch_solution(double t, double theta0, double phi0, const BathSpec& bath);

/// t1 = ln(2 (N + 1)) / (g0 (2N + 1)), where <sigma_3> of the excited state
/// crosses zero.
double excited_sign_change_time(const BathSpec& bath);

/// Interaction-picture affine Bloch map of the closed-form evolution over t.
AffineBlochMap dissipative_bloch_map(double t, const BathSpec& bath);

/// RK4 integration of lindblad_rhs (interaction picture) from
/// from_angles(theta0, phi0) over [0, t_end]; every step is returned.
struct LindbladTrajectory {
  std::vector<double> times;
  std::vector<Matrix2> states;
};

LindbladTrajectory integrate_lindblad(double theta0, double phi0, const BathSpec& bath,
                                      double t_end, const OdeSpec& ode);
LindbladTrajectory integrate_lindblad(const Matrix2& rho0, const BathSpec& bath, double t_end,
                                      const OdeSpec& ode);

/// Squeezed generalized amplitude damping channel data.
struct SgadParameters {
  double t = 0.0;
  double p1 = 1.0;
  double p2 = 0.0;
  double alpha = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double phi = 0.0;
  // Auxiliary reals entering the p2 root.
  double aux_a = 0.0;
  double aux_b = 0.0;
  double aux_c = 0.0;
  double aux_d = 0.0;
  std::array<double, 2> roots{0.0, 0.0};
  /// Max deviation of the Kraus image from the closed-form map per root
  /// (infinity when the root is outside the valid region).
  std::array<double, 2> reproduction_residual{0.0, 0.0};
  int chosen_root = 0;
  std::string note;
};

class SgadError : public NumericalError {
 public:
  SgadError(const std::string& what, std::array<double, 2> roots)
      : NumericalError(what), roots_(roots) {}
  std::array<double, 2> roots() const { return roots_; }

 private:
  std::array<double, 2> roots_;
};

struct SgadChannel {
  SgadParameters params;
  KrausSet kraus;
};

/// Kraus form of the dissipative evolution over t (interaction picture).
/// Both roots of the p2 quadratic are tried; the one lying in the valid
/// region whose Kraus set best reproduces the closed-form map is kept.
/// Throws SgadError when neither root is admissible.
SgadChannel sgad_channel(double t, const BathSpec& bath);

/// Kraus set built from explicit parameters (E_2, E_3 dropped when p2 == 0).
KrausSet sgad_kraus(double p1, double alpha, double mu, double nu, double phi);

/// Generalized amplitude damping in Bloch form (squeezing must be zero):
/// (x, y) scaled by sqrt(1 - lambda), z -> lambda (1 - 2p) + z (1 - lambda),
/// p = (N_th + 1) / (2 N_th + 1), lambda = 1 - e^{-g0 (2 N_th + 1) t}.
struct GadBlochMap {
  double lambda = 0.0;
  double p = 1.0;
  AffineBlochMap map;
};

GadBlochMap gad_bloch_map(double t, const BathSpec& bath);

/// Fixed point diag(1 - q, q), q = (N + 1) / (2N + 1).
QubitState asymptotic_state(const BathSpec& bath);

}  // namespace gpq
