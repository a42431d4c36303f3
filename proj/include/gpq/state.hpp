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
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gpq {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

// Basis ordering used throughout: index 0 is the excited level |1>, index 1
// is the ground level |0>. sigma_3 = diag(1, -1), so the north pole of the
// Bloch sphere is the excited state.

/// Raised for out-of-domain arguments and invariant violations.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot deliver the requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace pauli {
Matrix2 identity();
Matrix2 sigma_x();
Matrix2 sigma_y();
Matrix2 sigma_z();
/// |1><0|
Matrix2 raising();
/// |0><1|
Matrix2 lowering();
}  // namespace pauli

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double length() const;
  Eigen::Vector3d as_eigen() const { return {x, y, z}; }
  static BlochVector from_eigen(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
};

struct StateTolerance {
  double hermitian = 1e-12;
  double trace = 1e-12;
  double positivity = 1e-12;
};

/// A validated 2x2 density matrix.
class QubitState {
 public:
  /// Checks Hermiticity, unit trace and positivity against `tol`.
  static QubitState from_matrix(const Matrix2& rho, const StateTolerance& tol = {});
  static QubitState from_bloch(const BlochVector& r);
  /// cos(theta0/2)|1> + e^{i phi0} sin(theta0/2)|0>, theta0 in [0, pi], phi0 in [0, 2 pi).
  static QubitState from_angles(double theta0, double phi0);
  static QubitState from_pure(const Vector2& psi);

  const Matrix2& matrix() const { return rho_; }
  BlochVector bloch() const;
  double purity() const;
  Complex operator()(int i, int j) const { return rho_(i, j); }

 private:
  explicit QubitState(const Matrix2& rho) : rho_(rho) {}
  Matrix2 rho_;
};

/// Operator-sum representation of a qubit channel.
class KrausSet {
 public:
  static constexpr double kCompletenessTolerance = 1e-10;

  /// Throws DomainError naming the residual when sum_j E_j^dag E_j deviates
  /// from the identity by more than `tol` (max-norm).
  explicit KrausSet(std::vector<Matrix2> ops, double tol = kCompletenessTolerance);

  static KrausSet identity();

  std::span<const Matrix2> ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  double completeness_residual() const;

 private:
  std::vector<Matrix2> ops_;
};

QubitState apply_kraus(const QubitState& state, const KrausSet& kraus);

/// sum_j E_j rho E_j^dag without state validation; used on raw operators.
Matrix2 apply_kraus(const Matrix2& rho, const KrausSet& kraus);

struct EigenPair {
  double value = 0.0;
  Vector2 vector = Vector2::Zero();
};

struct Eigensystem {
  EigenPair upper;  ///< larger eigenvalue
  EigenPair lower;
  bool degenerate = false;
};

inline constexpr double kDegeneracyTolerance = 1e-9;

/// Closed-form eigendecomposition. Vectors follow a fixed gauge: the
/// component on index 0 is real and non-negative when its magnitude exceeds
/// 1e-9, otherwise the index-1 component is. Degenerate spectra
/// (gap < 1e-9) are flagged, the vectors are then the computational basis.
Eigensystem eigensystem(const QubitState& state);

double trace_distance(const QubitState& a, const QubitState& b);
double max_abs_diff(const Matrix2& a, const Matrix2& b);

/// Affine action r -> M r + c of a channel on Bloch vectors.
struct AffineBlochMap {
  Eigen::Matrix3d linear = Eigen::Matrix3d::Identity();
  Eigen::Vector3d offset = Eigen::Vector3d::Zero();

  BlochVector apply(const BlochVector& r) const;
};

AffineBlochMap affine_map_of(const KrausSet& kraus);

/// Principal semi-axes of the image of the unit sphere under an affine map,
/// sorted descending, with the unit axis directions as columns.
struct EllipsoidAxes {
  Eigen::Vector3d semi_axes;
  Eigen::Matrix3d directions;
  /// Index of the axis most aligned with sigma_3.
  int polar_index = 0;
};

/// Exact axes from the singular values of the linear part.
EllipsoidAxes ellipsoid_axes(const AffineBlochMap& map);

/// Axes estimated from the second moments of an image point cloud of a
/// uniformly sampled sphere (covariance = M M^T / 3).
EllipsoidAxes ellipsoid_axes(std::span<const BlochVector> image_points);

/// N points spread quasi-uniformly on the unit sphere (golden-angle spiral).
std::vector<BlochVector> fibonacci_sphere(std::size_t n);

}  // namespace gpq
