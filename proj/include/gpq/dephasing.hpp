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
#include <vector>

#include "gpq/bath.hpp"
#include "gpq/numerics.hpp"
#include "gpq/state.hpp"

namespace gpq {

/// Pure-dephasing (QND) decoherence exponent gamma(t) for the squeezed
/// thermal Ohmic bath, evaluated as a frequency integral:
///
///   gamma(t) = (gamma0 / 2 pi) int_0^inf dw e^{-w/wc} coth(w / 2T)
///              (4 sin^2(w t / 2) / w) [cosh 2r - sinh 2r cos(w (t - 2a))]
///
/// with coth == 1 at T == 0.
double gamma_qnd(double t, const BathSpec& bath, const QuadratureSpec& quad = {});

/// Phase function eta(t) = -(gamma0 / pi) atan(wc t). It cancels for a
/// spin-1/2 (m^2 - n^2 = 0) and is kept for validation only.
double eta_qnd(double t, const BathSpec& bath);

/// Channel data of the dephasing evolution at one time.
struct DephasingSample {
  double t = 0.0;
  double gamma = 0.0;
  double eta = 0.0;
  double lambda = 0.0;  ///< 1 - exp(-2 w^2 gamma)
  double beta = 0.0;    ///< w t
};

DephasingSample dephasing_sample(double t, const BathSpec& bath, const QuadratureSpec& quad = {});

/// gamma(t) tabulated on the uniform grid t_k = k tau / intervals over one
/// quasi-cycle. Built once, read-only afterwards, so it can be shared by
/// concurrent readers.
class GammaTable {
 public:
  GammaTable(const BathSpec& bath, std::size_t intervals, const QuadratureSpec& quad = {});

  /// Table for gamma == 0 everywhere (environment switched off).
  static GammaTable zero(const BathSpec& bath, std::size_t intervals);

  const BathSpec& bath() const { return bath_; }
  std::size_t intervals() const { return gamma_.size() - 1; }
  double step() const { return step_; }
  double time(std::size_t k) const { return step_ * static_cast<double>(k); }
  double gamma(std::size_t k) const { return gamma_[k]; }
  std::span<const double> values() const { return gamma_; }

 private:
  GammaTable() = default;
  BathSpec bath_;
  double step_ = 0.0;
  std::vector<double> gamma_;
};

/// Reduced state given the decoherence exponent at time t.
QubitState qnd_state_from_gamma(double t, double theta0, double phi0, double omega, double gamma);

QubitState qnd_state(double t, double theta0, double phi0, const BathSpec& bath,
                     const QuadratureSpec& quad = {});

/// Phase-damping Kraus pair {diag(1, e^{i beta} sqrt(1 - lambda)), diag(0, sqrt(lambda))}.
KrausSet phase_damping_kraus(double lambda, double beta);

KrausSet phase_damping_kraus(double t, const BathSpec& bath, const QuadratureSpec& quad = {});

}  // namespace gpq
