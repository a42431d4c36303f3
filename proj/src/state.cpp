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

#include "gpq/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace gpq {

namespace pauli {
Matrix2 identity() { return Matrix2::Identity(); }
Matrix2 sigma_x() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
Matrix2 sigma_y() {
  Matrix2 m;
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}
Matrix2 sigma_z() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
Matrix2 raising() {
  Matrix2 m = Matrix2::Zero();
  m(0, 1) = 1.0;
  return m;
}
Matrix2 lowering() {
  Matrix2 m = Matrix2::Zero();
  m(1, 0) = 1.0;
  return m;
}
}  // namespace pauli

double BlochVector::length() const { return std::sqrt(x * x + y * y + z * z); }

QubitState QubitState::from_matrix(const Matrix2& rho, const StateTolerance& tol) {
  if (!rho.allFinite()) throw DomainError("density matrix has non-finite entries");
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.hermitian) {
    throw DomainError(fmt::format("density matrix is not Hermitian (residual {:.3e})", herm));
  }
  const double tr_err = std::abs(rho.trace() - 1.0);
  if (tr_err > tol.trace) {
    throw DomainError(fmt::format("density matrix trace differs from 1 by {:.3e}", tr_err));
  }
  // Smallest eigenvalue of a Hermitian 2x2 with unit trace: (1 - L) / 2.
  const double d = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
  const double lmin = 0.5 * rho.trace().real() - std::hypot(d, std::abs(rho(0, 1)));
  if (lmin < -tol.positivity) {
    throw DomainError(fmt::format("density matrix is not positive (eigenvalue {:.3e})", lmin));
  }
  return QubitState(rho);
}

QubitState QubitState::from_bloch(const BlochVector& r) {
  Matrix2 rho;
  rho << 0.5 * (1.0 + r.z), Complex(0.5 * r.x, -0.5 * r.y), Complex(0.5 * r.x, 0.5 * r.y),
      0.5 * (1.0 - r.z);
  return from_matrix(rho);
}

QubitState QubitState::from_angles(double theta0, double phi0) {
  if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi)) {
    throw DomainError(fmt::format("theta0 = {} outside [0, pi]", theta0));
  }
  if (!(phi0 >= 0.0 && phi0 < 2.0 * std::numbers::pi)) {
    throw DomainError(fmt::format("phi0 = {} outside [0, 2 pi)", phi0));
  }
  Vector2 psi(std::cos(0.5 * theta0), std::polar(std::sin(0.5 * theta0), phi0));
  return from_pure(psi);
}

QubitState QubitState::from_pure(const Vector2& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw DomainError("state vector has zero norm");
  const Vector2 u = psi / n;
  Matrix2 rho = u * u.adjoint();
  rho(0, 0) = rho(0, 0).real();
  rho(1, 1) = rho(1, 1).real();
  rho(1, 0) = std::conj(rho(0, 1));
  return QubitState(rho);
}

BlochVector QubitState::bloch() const {
  const Complex c = rho_(0, 1);
  return {2.0 * c.real(), -2.0 * c.imag(), rho_(0, 0).real() - rho_(1, 1).real()};
}

double QubitState::purity() const { return (rho_ * rho_).trace().real(); }

KrausSet::KrausSet(std::vector<Matrix2> ops, double tol) : ops_(std::move(ops)) {
  if (ops_.empty()) throw DomainError("Kraus set is empty");
  const double res = completeness_residual();
  if (!(res <= tol)) {
    throw DomainError(
        fmt::format("Kraus completeness violated: |sum E^dag E - I|_max = {:.3e}", res));
  }
}

KrausSet KrausSet::identity() { return KrausSet({Matrix2::Identity()}); }

double KrausSet::completeness_residual() const {
  Matrix2 sum = Matrix2::Zero();
  for (const auto& e : ops_) sum += e.adjoint() * e;
  return (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

Matrix2 apply_kraus(const Matrix2& rho, const KrausSet& kraus) {
  Matrix2 out = Matrix2::Zero();
  for (const auto& e : kraus.ops()) out += e * rho * e.adjoint();
  return out;
}

QubitState apply_kraus(const QubitState& state, const KrausSet& kraus) {
  Matrix2 out = apply_kraus(state.matrix(), kraus);
  // Remove rounding asymmetry; the map is Hermiticity preserving exactly.
  out = 0.5 * (out + out.adjoint()).eval();
  return QubitState::from_matrix(out, {1e-12, 1e-10, 1e-10});
}

namespace {

void fix_gauge(Vector2& v) {
  constexpr double kSmall = 1e-9;
  const int ref = std::abs(v(0)) > kSmall ? 0 : 1;
  const double mag = std::abs(v(ref));
  if (mag > 0.0) v *= std::conj(v(ref)) / mag;
  v(ref) = v(ref).real();
}

}  // namespace

Eigensystem eigensystem(const QubitState& state) {
  const Matrix2& rho = state.matrix();
  const double mean = 0.5 * (rho(0, 0).real() + rho(1, 1).real());
  const double d = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
  const Complex c = rho(0, 1);
  const double half_gap = std::hypot(d, std::abs(c));

  Eigensystem es;
  es.upper.value = mean + half_gap;
  es.lower.value = mean - half_gap;
  if (2.0 * half_gap < kDegeneracyTolerance) {
    es.degenerate = true;
    es.upper.vector = Vector2(1.0, 0.0);
    es.lower.vector = Vector2(0.0, 1.0);
    return es;
  }

  // Two algebraically equivalent forms; pick the one free of cancellation.
  Vector2 v;
  if (d >= 0.0) {
    v = Vector2(d + half_gap, std::conj(c));
  } else {
    v = Vector2(c, half_gap - d);
  }
  v.normalize();
  Vector2 w(-std::conj(v(1)), std::conj(v(0)));
  fix_gauge(v);
  fix_gauge(w);
  es.upper.vector = v;
  es.lower.vector = w;
  return es;
}

double trace_distance(const QubitState& a, const QubitState& b) {
  const BlochVector ra = a.bloch();
  const BlochVector rb = b.bloch();
  return 0.5 * std::sqrt((ra.x - rb.x) * (ra.x - rb.x) + (ra.y - rb.y) * (ra.y - rb.y) +
                         (ra.z - rb.z) * (ra.z - rb.z));
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) { return (a - b).cwiseAbs().maxCoeff(); }

BlochVector AffineBlochMap::apply(const BlochVector& r) const {
  return BlochVector::from_eigen(linear * r.as_eigen() + offset);
}

AffineBlochMap affine_map_of(const KrausSet& kraus) {
  // Linear in rho, so probe with the identity and the three Pauli directions.
  auto image = [&](const Matrix2& op) {
    const Matrix2 out = apply_kraus(op, kraus);
    return Eigen::Vector3d((out * pauli::sigma_x()).trace().real(),
                           (out * pauli::sigma_y()).trace().real(),
                           (out * pauli::sigma_z()).trace().real());
  };
  AffineBlochMap map;
  map.offset = image(0.5 * pauli::identity());
  map.linear.col(0) = image(0.5 * pauli::sigma_x());
  map.linear.col(1) = image(0.5 * pauli::sigma_y());
  map.linear.col(2) = image(0.5 * pauli::sigma_z());
  return map;
}

namespace {

EllipsoidAxes axes_from_symmetric(const Eigen::Matrix3d& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(gram);
  EllipsoidAxes out;
  // Eigen sorts ascending; report descending.
  for (int k = 0; k < 3; ++k) {
    out.semi_axes(k) = std::sqrt(std::max(0.0, solver.eigenvalues()(2 - k)));
    out.directions.col(k) = solver.eigenvectors().col(2 - k);
  }
  int best = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(out.directions(2, k)) > std::abs(out.directions(2, best))) best = k;
  }
  out.polar_index = best;
  return out;
}

}  // namespace

EllipsoidAxes ellipsoid_axes(const AffineBlochMap& map) {
  return axes_from_symmetric(map.linear * map.linear.transpose());
}

EllipsoidAxes ellipsoid_axes(std::span<const BlochVector> image_points) {
  if (image_points.size() < 4) throw DomainError("need at least four image points");
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& p : image_points) mean += p.as_eigen();
  mean /= static_cast<double>(image_points.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& p : image_points) {
    const Eigen::Vector3d d = p.as_eigen() - mean;
    cov += d * d.transpose();
  }
  cov *= 3.0 / static_cast<double>(image_points.size());
  return axes_from_symmetric(cov);
}

std::vector<BlochVector> fibonacci_sphere(std::size_t n) {
  if (n == 0) throw DomainError("fibonacci_sphere needs n >= 1");
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<BlochVector> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double ang = golden * static_cast<double>(i);
    pts.push_back({rho * std::cos(ang), rho * std::sin(ang), z});
  }
  return pts;
}

}  // namespace gpq
