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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gpq/state.hpp"

namespace gpq::testing {

inline constexpr double kPi = std::numbers::pi;
inline constexpr std::uint64_t kSeed = 0x5eed2026;

/// Distance between two phases on the circle.
inline double circle_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * kPi));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline QubitState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector3d d(g(rng), g(rng), g(rng));
  d.normalize();
  const double len = std::cbrt(uniform(rng, 0.0, 1.0));
  return QubitState::from_bloch(BlochVector::from_eigen(len * d));
}

inline QubitState random_pure_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector2 v(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
  return QubitState::from_pure(v);
}

/// Kraus operators of a random channel: 2x2 blocks of a random 2k x 2 isometry.
inline std::vector<Matrix2> random_kraus(std::mt19937_64& rng, int k) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(2 * k, 2);
  for (int i = 0; i < 2 * k; ++i) {
    for (int j = 0; j < 2; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(2 * k, 2);
  std::vector<Matrix2> ops;
  for (int i = 0; i < k; ++i) ops.push_back(q.block(2 * i, 0, 2, 2));
  return ops;
}

}  // namespace gpq::testing
