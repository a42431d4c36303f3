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

#include <doctest.h>

#include "gpq/state.hpp"
#include "test_support.hpp"

using namespace gpq;
using gpq::testing::kPi;
using gpq::testing::kSeed;

TEST_CASE("from_angles places theta0 on the sigma_3 axis") {
  const double th = 0.7, ph = 1.9;
  const QubitState s = QubitState::from_angles(th, ph);
  const BlochVector b = s.bloch();
  CHECK(b.x == doctest::Approx(std::sin(th) * std::cos(ph)).epsilon(1e-14));
  CHECK(b.y == doctest::Approx(std::sin(th) * std::sin(ph)).epsilon(1e-14));
  CHECK(b.z == doctest::Approx(std::cos(th)).epsilon(1e-14));
  CHECK(s(0, 0).real() == doctest::Approx(std::cos(th / 2) * std::cos(th / 2)));
  CHECK(std::abs(s(0, 1) - std::polar(0.5 * std::sin(th), -ph)) < 1e-15);
  CHECK(s.purity() == doctest::Approx(1.0));
}

TEST_CASE("from_angles rejects out-of-range angles") {
  CHECK_THROWS_AS(QubitState::from_angles(-0.1, 0.0), DomainError);
  CHECK_THROWS_AS(QubitState::from_angles(kPi + 1e-9, 0.0), DomainError);
  CHECK_THROWS_AS(QubitState::from_angles(1.0, 2.0 * kPi), DomainError);
}

TEST_CASE("from_matrix validation") {
  Matrix2 m;
  m << 0.5, Complex(0.1, 0.2), Complex(0.1, 0.2), 0.5;
  CHECK_THROWS_AS(QubitState::from_matrix(m), DomainError);  // not Hermitian
  m << 0.6, 0.0, 0.0, 0.5;
  CHECK_THROWS_AS(QubitState::from_matrix(m), DomainError);  // trace
  m << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(QubitState::from_matrix(m), DomainError);  // negative eigenvalue
  m << 0.5, 0.5, 0.5, 0.5;
  CHECK_NOTHROW(QubitState::from_matrix(m));
  m(0, 0) = std::nan("");
  CHECK_THROWS_AS(QubitState::from_matrix(m), DomainError);
}

TEST_CASE("Pauli conventions") {
  const Matrix2 comm = pauli::sigma_x() * pauli::sigma_y() - pauli::sigma_y() * pauli::sigma_x();
  CHECK(max_abs_diff(comm, Complex(0, 2) * pauli::sigma_z()) < 1e-15);
  // sigma_+ raises |0> (index 1) to |1> (index 0).
  Vector2 ground(0.0, 1.0);
  const Vector2 up = pauli::raising() * ground;
  CHECK(std::abs(up(0) - 1.0) < 1e-15);
  CHECK(max_abs_diff(pauli::lowering(), pauli::raising().adjoint()) == 0.0);
}

TEST_CASE("eigensystem solves the eigenproblem with a fixed gauge") {
  std::mt19937_64 rng(kSeed);
  for (int k = 0; k < 200; ++k) {
    const QubitState s = gpq::testing::random_state(rng);
    const Eigensystem es = eigensystem(s);
    REQUIRE_FALSE(es.degenerate);
    for (const EigenPair* p : {&es.upper, &es.lower}) {
      CHECK((s.matrix() * p->vector - p->value * p->vector).norm() < 1e-13);
      CHECK(p->vector.norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(es.upper.value >= es.lower.value);
    CHECK(es.upper.value - es.lower.value == doctest::Approx(s.bloch().length()).epsilon(1e-12));
    CHECK(std::abs(es.upper.vector.dot(es.lower.vector)) < 1e-13);
    CHECK(es.upper.vector(0).imag() == 0.0);
    CHECK(es.upper.vector(0).real() >= 0.0);
  }
}

TEST_CASE("eigensystem flags degeneracy") {
  const Eigensystem es = eigensystem(QubitState::from_bloch({0.0, 0.0, 0.0}));
  CHECK(es.degenerate);
  const Eigensystem near = eigensystem(QubitState::from_bloch({1e-11, 0.0, 0.0}));
  CHECK(near.degenerate);
  const Eigensystem ok = eigensystem(QubitState::from_bloch({1e-6, 0.0, 0.0}));
  CHECK_FALSE(ok.degenerate);
}

TEST_CASE("eigenvector gauge switches to index 1 when the index-0 weight vanishes") {
  const Eigensystem es = eigensystem(QubitState::from_angles(kPi, 0.3));
  CHECK(std::abs(es.upper.vector(0)) < 1e-9);
  CHECK(es.upper.vector(1).imag() == 0.0);
  CHECK(es.upper.vector(1).real() == doctest::Approx(1.0));
}

TEST_CASE("KrausSet completeness") {
  std::vector<Matrix2> bad{Matrix2::Identity() * 0.9};
  CHECK_THROWS_AS(KrausSet{bad}, DomainError);
  std::mt19937_64 rng(kSeed);
  for (int k = 1; k <= 4; ++k) {
    const KrausSet ks(gpq::testing::random_kraus(rng, k));
    CHECK(ks.size() == static_cast<std::size_t>(k));
    CHECK(ks.completeness_residual() < 1e-13);
  }
}

TEST_CASE("property: Kraus maps preserve trace, Hermiticity and positivity") {
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 300; ++trial) {
    const KrausSet ks(gpq::testing::random_kraus(rng, 1 + trial % 4));
    const QubitState in = gpq::testing::random_state(rng);
    const Matrix2 out = apply_kraus(in.matrix(), ks);
    CHECK(std::abs(out.trace() - 1.0) < 1e-13);
    CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
    const Eigen::SelfAdjointEigenSolver<Matrix2> eig(out);
    CHECK(eig.eigenvalues().minCoeff() > -1e-13);
    CHECK_NOTHROW(apply_kraus(in, ks));
  }
}

TEST_CASE("affine map of a channel reproduces its action") {
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 50; ++trial) {
    const KrausSet ks(gpq::testing::random_kraus(rng, 3));
    const AffineBlochMap map = affine_map_of(ks);
    const QubitState in = gpq::testing::random_state(rng);
    const BlochVector direct = apply_kraus(in, ks).bloch();
    const BlochVector via = map.apply(in.bloch());
    CHECK((direct.as_eigen() - via.as_eigen()).norm() < 1e-13);
  }
  const AffineBlochMap id = affine_map_of(KrausSet::identity());
  CHECK((id.linear - Eigen::Matrix3d::Identity()).norm() < 1e-15);
  CHECK(id.offset.norm() < 1e-15);
}

TEST_CASE("ellipsoid axes from the map and from a sampled cloud agree") {
  AffineBlochMap map;
  map.linear = Eigen::Vector3d(0.8, 0.5, 0.3).asDiagonal();
  map.offset = Eigen::Vector3d(0.0, 0.0, -0.2);
  const EllipsoidAxes exact = ellipsoid_axes(map);
  CHECK(exact.semi_axes(0) == doctest::Approx(0.8));
  CHECK(exact.semi_axes(2) == doctest::Approx(0.3));
  CHECK(exact.polar_index == 2);
  std::vector<BlochVector> cloud;
  for (const auto& p : fibonacci_sphere(4000)) cloud.push_back(map.apply(p));
  const EllipsoidAxes est = ellipsoid_axes(cloud);
  for (int k = 0; k < 3; ++k) CHECK(est.semi_axes(k) == doctest::Approx(exact.semi_axes(k)).epsilon(2e-3));
  CHECK(est.polar_index == 2);
}

TEST_CASE("fibonacci sphere is unit and balanced") {
  const auto pts = fibonacci_sphere(1000);
  REQUIRE(pts.size() == 1000);
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& p : pts) {
    CHECK(p.length() == doctest::Approx(1.0).epsilon(1e-14));
    mean += p.as_eigen();
  }
  CHECK((mean / 1000.0).norm() < 2e-3);
}

TEST_CASE("trace distance") {
  const QubitState a = QubitState::from_angles(0.0, 0.0);
  const QubitState b = QubitState::from_angles(kPi, 0.0);
  CHECK(trace_distance(a, b) == doctest::Approx(1.0));
  CHECK(trace_distance(a, a) == doctest::Approx(0.0));
}
