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

#include <cmath>

#include "gpq/dissipative.hpp"
#include "test_support.hpp"

using namespace gpq;
using gpq::testing::kPi;
using gpq::testing::kSeed;

namespace {

BathSpec diss_bath(double g0, double temp, double r, double phi) {
  BathSpec b;
  b.gamma0 = g0;
  b.temperature = temp;
  b.squeeze_r = r;
  b.squeeze_phi = phi;
  return b;
}

const BathSpec kBaths[] = {
    diss_bath(0.6, 5.0, 0.4, 1.5), diss_bath(0.3, 0.0, 0.0, 0.0), diss_bath(0.1, 2.0, 0.0, 0.0),
    diss_bath(0.05, 0.0, 0.7, 0.3), diss_bath(0.005, 20.0, 0.4, 0.0), diss_bath(0.2, 1.0, 1.0, 4.0),
};

AffineBlochMap compose(const AffineBlochMap& second, const AffineBlochMap& first) {
  AffineBlochMap m;
  m.linear = second.linear * first.linear;
  m.offset = second.linear * first.offset + second.offset;
  return m;
}

double map_diff(const AffineBlochMap& a, const AffineBlochMap& b) {
  return std::max((a.linear - b.linear).cwiseAbs().maxCoeff(), (a.offset - b.offset).cwiseAbs().maxCoeff());
}

}  // namespace

TEST_CASE("bath coefficients") {
  const auto c = SqueezedBathCoeffs::from(diss_bath(0.1, 2.0, 0.5, 0.7));
  const double nth = 1.0 / std::expm1(0.5);
  CHECK(c.n_th == doctest::Approx(nth));
  CHECK(c.n_eff == doctest::Approx(nth * std::cosh(1.0) + std::sinh(0.5) * std::sinh(0.5)));
  CHECK(std::abs(c.m) == doctest::Approx(0.5 * c.a_rate));
  CHECK(std::arg(-c.m) == doctest::Approx(0.7));
  // |M|^2 <= N (N + 1) keeps the generator completely positive.
  CHECK(std::norm(c.m) <= c.n_eff * (c.n_eff + 1.0) + 1e-12);
  CHECK(SqueezedBathCoeffs::from(diss_bath(0.1, 0.0, 0.0, 0.0)).n_th == 0.0);
}

TEST_CASE("generator equals its Lindblad form") {
  for (const auto& b : kBaths) {
    const auto c = SqueezedBathCoeffs::from(b);
    CHECK(lindblad_form_check(c, b.gamma0, kSeed) < 1e-13);
  }
}

TEST_CASE("closed form agrees with RK4 integration of the master equation") {
  std::mt19937_64 rng(kSeed);
  for (const auto& b : kBaths) {
    const double th = gpq::testing::uniform(rng, 0.0, kPi);
    const double ph = gpq::testing::uniform(rng, 0.0, 2.0 * kPi);
    const double tau = b.period();
    const LindbladTrajectory rk = integrate_lindblad(th, ph, b, tau, OdeSpec{tau / 4096.0});
    const DissipativeEvolution evo(th, ph, b);
    double worst = 0.0;
    for (std::size_t k = 0; k < rk.times.size(); k += 64) {
      worst = std::max(worst, max_abs_diff(rk.states[k], evo.interaction_state(rk.times[k]).matrix()));
    }
    worst = std::max(worst, max_abs_diff(rk.states.back(), evo.interaction_state(tau).matrix()));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("property: closed-form maps compose as a semigroup") {
  std::mt19937_64 rng(kSeed + 7);
  for (const auto& b : kBaths) {
    for (int k = 0; k < 10; ++k) {
      const double s = gpq::testing::uniform(rng, 0.0, 3.0);
      const double t = gpq::testing::uniform(rng, 0.0, 3.0);
      const auto lhs = dissipative_bloch_map(s + t, b);
      const auto rhs = compose(dissipative_bloch_map(t, b), dissipative_bloch_map(s, b));
      CHECK(map_diff(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("property: evolved states stay valid density matrices") {
  std::mt19937_64 rng(kSeed + 3);
  for (const auto& b : kBaths) {
    for (int k = 0; k < 20; ++k) {
      const double th = gpq::testing::uniform(rng, 0.0, kPi);
      const double ph = gpq::testing::uniform(rng, 0.0, 2.0 * kPi);
      const DissipativeEvolution evo(th, ph, b);
      const double t = gpq::testing::uniform(rng, 0.0, 4.0 * kPi);
      CHECK_NOTHROW(evo.schrodinger_state(t));
      CHECK(evo.schrodinger_state(t).bloch().length() <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("Bloch sample relations") {
  const BathSpec b = diss_bath(0.2, 1.0, 0.6, 2.2);
  const DissipativeEvolution evo(1.2, 0.9, b);
  CHECK(evo.chi(0.0) == doctest::Approx(0.9));
  CHECK(std::abs(evo.unit_coherence(0.0)) == doctest::Approx(1.0));
  CHECK(evo.inversion(0.0) == doctest::Approx(std::cos(1.2)));
  for (double t : {0.3, 1.7, 5.0}) {
    const double h = 1e-5;
    CHECK(evo.chi_rate(t) == doctest::Approx((evo.chi(t + h) - evo.chi(t - h)) / (2.0 * h)).epsilon(1e-7));
    CHECK(evo.inversion_rate(t) ==
          doctest::Approx((evo.inversion(t + h) - evo.inversion(t - h)) / (2.0 * h)).epsilon(1e-7));
    const BlochSample s = evo.sample(t);
    CHECK(std::abs(s.coherence - s.radius * std::polar(1.0, -s.chi)) < 1e-14);
  }
}

TEST_CASE("inversion of the excited state changes sign at t1") {
  for (const auto& b : kBaths) {
    const DissipativeEvolution evo(0.0, 0.0, b);
    const double t1 = excited_sign_change_time(b);
    REQUIRE(evo.inversion_zero().has_value());
    CHECK(*evo.inversion_zero() == doctest::Approx(t1).epsilon(1e-13));
    CHECK(evo.inversion(t1 * 0.999) > 0.0);
    CHECK(evo.inversion(t1 * 1.001) < 0.0);
  }
  CHECK_FALSE(DissipativeEvolution(2.0, 0.0, kBaths[0]).inversion_zero().has_value());
  CHECK_THROWS_AS(excited_sign_change_time(BathSpec{}), DomainError);
}

TEST_CASE("asymptotic state is a fixed point of the generator") {
  for (const auto& b : kBaths) {
    const QubitState fp = asymptotic_state(b);
    CHECK(lindblad_rhs(fp.matrix(), SqueezedBathCoeffs::from(b), b.gamma0).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("SGAD channel reproduces the closed-form evolution") {
  std::mt19937_64 rng(kSeed + 11);
  for (const auto& b : kBaths) {
    for (double t : {1e-9, 1e-4, 0.15, 1.0, 3.0}) {
      CAPTURE(t);
      const SgadChannel ch = sgad_channel(t, b);
      CHECK(ch.kraus.completeness_residual() < 1e-12);
      const double th = gpq::testing::uniform(rng, 0.0, kPi);
      const double ph = gpq::testing::uniform(rng, 0.0, 2.0 * kPi);
      const QubitState out = apply_kraus(QubitState::from_angles(th, ph), ch.kraus);
      CHECK(max_abs_diff(out.matrix(), DissipativeEvolution(th, ph, b).interaction_state(t).matrix()) < 1e-8);
      for (double v : {ch.params.p1, ch.params.alpha, ch.params.mu, ch.params.nu}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}

TEST_CASE("SGAD reduces to generalized amplitude damping without squeezing") {
  const BathSpec b = diss_bath(0.3, 2.0, 0.0, 0.0);
  const double p1_ref = sgad_channel(0.2, b).params.p1;
  for (double t : {1e-6, 0.2, 1.0, 4.0}) {
    const SgadChannel ch = sgad_channel(t, b);
    CHECK(ch.params.mu == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(std::abs(ch.params.nu - ch.params.alpha) < 1e-10);
    CHECK(std::abs(ch.params.p1 - p1_ref) < 1e-10);
    const GadBlochMap gad = gad_bloch_map(t, b);
    CHECK(map_diff(gad.map, dissipative_bloch_map(t, b)) < 1e-14);
    CHECK(std::abs(ch.params.p1 - gad.p) < 1e-10);
  }
  CHECK_THROWS_AS(gad_bloch_map(1.0, kBaths[0]), DomainError);
}

TEST_CASE("SGAD reduces to amplitude damping in the vacuum") {
  const BathSpec b = diss_bath(0.3, 0.0, 0.0, 0.0);
  for (double t : {0.01, 1.0, 5.0}) {
    const SgadChannel ch = sgad_channel(t, b);
    CHECK(ch.params.p2 == 0.0);
    REQUIRE(ch.kraus.size() == 2);
    const double decay = -std::expm1(-b.gamma0 * t);
    Matrix2 e0 = Matrix2::Zero();
    e0(0, 0) = std::sqrt(1.0 - decay);
    e0(1, 1) = 1.0;
    Matrix2 e1 = Matrix2::Zero();
    e1(1, 0) = std::sqrt(decay);
    CHECK(max_abs_diff(ch.kraus.ops()[0], e0) < 1e-14);
    CHECK(max_abs_diff(ch.kraus.ops()[1], e1) < 1e-14);
  }
}

TEST_CASE("SGAD at t = 0 is the identity and records its root choice") {
  const SgadChannel id = sgad_channel(0.0, kBaths[0]);
  CHECK(id.kraus.size() == 1);
  const SgadChannel ch = sgad_channel(1.0, kBaths[0]);
  CHECK((ch.params.chosen_root == 0 || ch.params.chosen_root == 1));
  CHECK(ch.params.reproduction_residual[ch.params.chosen_root] < 1e-10);
  CHECK_FALSE(ch.params.note.empty());
  CHECK_THROWS_AS(sgad_channel(-1.0, kBaths[0]), DomainError);
}

TEST_CASE("explicit SGAD parameters are range checked") {
  CHECK_THROWS_AS(sgad_kraus(0.5, 1.2, 0.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(sgad_kraus(0.5, 0.1, -0.1, 0.0, 0.0), DomainError);
  CHECK(sgad_kraus(1.0, 0.3, 0.0, 0.0, 0.0).size() == 2);
  CHECK(sgad_kraus(0.4, 0.3, 0.2, 0.1, 1.0).size() == 4);
}

TEST_CASE("SGAD image of the sphere is oblate") {
  for (const auto& b : {kBaths[0], kBaths[2]}) {
    const EllipsoidAxes ax = ellipsoid_axes(affine_map_of(sgad_channel(0.15, b).kraus));
    const double polar = ax.semi_axes(ax.polar_index);
    for (int k = 0; k < 3; ++k) {
      if (k != ax.polar_index) CHECK(ax.semi_axes(k) > polar);
    }
  }
}
