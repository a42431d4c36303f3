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

#include <numbers>

namespace gpq {

/// Squeezed thermal Ohmic environment. Units hbar = k_B = 1.
struct BathSpec {
  double omega = 1.0;         ///< qubit transition frequency
  double omega_c = 40.0;      ///< Ohmic cutoff (dephasing sector)
  double gamma0 = 0.0;        ///< coupling / spontaneous emission rate
  double temperature = 0.0;   ///< T >= 0; T == 0 is the vacuum limit
  double squeeze_r = 0.0;     ///< squeeze magnitude r >= 0
  double squeeze_a = 0.0;     ///< dephasing sector: squeeze phase Phi(w) = a w
  double squeeze_phi = 0.0;   ///< dissipative sector: constant squeeze phase

  /// Throws DomainError on an unphysical parameter.
  void validate() const;

  /// One quasi-cycle, 2 pi / omega.
  double period() const { return 2.0 * std::numbers::pi / omega; }
};

}  // namespace gpq
