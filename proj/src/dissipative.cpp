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

#include "gpq/dissipative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>

namespace gpq {

SqueezedBathCoeffs SqueezedBathCoeffs::from(const BathSpec& bath) {
  bath.validate();
  SqueezedBathCoeffs c;
  c.squeeze_r = bath.squeeze_r;
  c.squeeze_phi = bath.squeeze_phi;
  c.n_th = bath.temperature > 0.0 ? 1.0 / std::expm1(bath.omega / bath.temperature) : 0.0;
  const double ch = std::cosh(bath.squeeze_r);
  const double sh = std::sinh(bath.squeeze_r);
  c.n_eff = c.n_th * (ch * ch + sh * sh) + sh * sh;
  c.a_rate = std::sinh(2.0 * bath.squeeze_r) * (2.0 * c.n_th + 1.0);
  c.m = -0.5 * std::polar(c.a_rate, bath.squeeze_phi);
  return c;
}

namespace {

Matrix2 dissipator(const Matrix2& l, const Matrix2& rho) {
  const Matrix2 ld = l.adjoint();
  const Matrix2 ldl = ld * l;
  return l * rho * ld - 0.5 * (ldl * rho + rho * ldl);
}

}  // namespace

Matrix2 lindblad_rhs(const Matrix2& rho, const SqueezedBathCoeffs& coeffs, double gamma0) {
  const Matrix2 sp = pauli::raising();
  const Matrix2 sm = pauli::lowering();
  const double n = coeffs.n_eff;
  return gamma0 * (n + 1.0) * dissipator(sm, rho) + gamma0 * n * dissipator(sp, rho) -
         gamma0 * coeffs.m * (sp * rho * sp) - gamma0 * std::conj(coeffs.m) * (sm * rho * sm);
}

std::vector<Matrix2> lindblad_operators(const SqueezedBathCoeffs& coeffs, double gamma0) {
  const Matrix2 r = std::cosh(coeffs.squeeze_r) * pauli::lowering() +
                    std::polar(std::sinh(coeffs.squeeze_r), coeffs.squeeze_phi) * pauli::raising();
  std::vector<Matrix2> ops;
  ops.push_back(std::sqrt(0.5 * gamma0 * (coeffs.n_th + 1.0)) * r);
  if (coeffs.n_th > 0.0) ops.push_back(std::sqrt(0.5 * gamma0 * coeffs.n_th) * r.adjoint());
  return ops;
}

Matrix2 lindblad_form_rhs(const Matrix2& rho, std::span<const Matrix2> ops) {
  Matrix2 out = Matrix2::Zero();
  for (const auto& l : ops) out += 2.0 * dissipator(l, rho);
  return out;
}

double lindblad_form_check(const SqueezedBathCoeffs& coeffs, double gamma0, std::uint64_t seed,
                           int trials) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit;
  const auto ops = lindblad_operators(coeffs, gamma0);
  double worst = 0.0;
  for (int k = 0; k < trials; ++k) {
    Eigen::Vector3d dir(gauss(rng), gauss(rng), gauss(rng));
    dir.normalize();
    const double len = std::cbrt(unit(rng));
    const QubitState rho = QubitState::from_bloch(BlochVector::from_eigen(len * dir));
    const Matrix2 a = lindblad_rhs(rho.matrix(), coeffs, gamma0);
    const Matrix2 b = lindblad_form_rhs(rho.matrix(), ops);
    worst = std::max(worst, max_abs_diff(a, b));
  }
  return worst;
}

DissipativeEvolution::DissipativeEvolution(double theta0, double phi0, const BathSpec& bath)
    : theta0_(theta0), phi0_(phi0), bath_(bath), coeffs_(SqueezedBathCoeffs::from(bath)) {
  // Validates the angles.
  (void)QubitState::from_angles(theta0, phi0);
  relax_ = bath.gamma0 * (2.0 * coeffs_.n_eff + 1.0);
  kappa_ = 0.5 * bath.gamma0 * coeffs_.a_rate;
}

double DissipativeEvolution::inversion(double t) const {
  const double decay = std::exp(-relax_ * t);
  return decay * std::cos(theta0_) + std::expm1(-relax_ * t) / (2.0 * coeffs_.n_eff + 1.0);
}

double DissipativeEvolution::inversion_rate(double t) const {
  return -relax_ * std::exp(-relax_ * t) * (std::cos(theta0_) + 1.0 / (2.0 * coeffs_.n_eff + 1.0));
}

Complex DissipativeEvolution::unit_coherence(double t) const {
  const double env = std::exp(-0.5 * relax_ * t);
  const double ch = std::cosh(kappa_ * t);
  const double sh = std::sinh(kappa_ * t);
  return env * (std::polar(ch, -phi0_) + std::polar(sh, bath_.squeeze_phi + phi0_));
}

Complex DissipativeEvolution::coherence(double t) const {
  return 0.5 * std::sin(theta0_) * unit_coherence(t);
}

double DissipativeEvolution::chi(double t) const {
  // b e^{i phi0} = env (cosh + sinh e^{i psi}) has positive real part, so its
  // principal argument is already continuous in t.
  const double ch = std::cosh(kappa_ * t);
  const double sh = std::sinh(kappa_ * t);
  const Complex f = ch + std::polar(sh, bath_.squeeze_phi + 2.0 * phi0_);
  return phi0_ - std::arg(f);
}

double DissipativeEvolution::chi_rate(double t) const {
  if (kappa_ == 0.0) return 0.0;
  const double ch = std::cosh(kappa_ * t);
  const double sh = std::sinh(kappa_ * t);
  const Complex e = std::polar(1.0, bath_.squeeze_phi + 2.0 * phi0_);
  return -kappa_ * std::imag((sh + ch * e) / (ch + sh * e));
}

BlochSample DissipativeEvolution::sample(double t) const {
  BlochSample s;
  s.t = t;
  s.inversion = inversion(t);
  s.coherence = coherence(t);
  s.radius = std::abs(s.coherence);
  s.chi = chi(t);
  s.chi_rate = chi_rate(t);
  return s;
}

QubitState DissipativeEvolution::interaction_state(double t) const {
  const double a = inversion(t);
  const Complex b = coherence(t);
  Matrix2 rho;
  rho << 0.5 * (1.0 + a), b, std::conj(b), 0.5 * (1.0 - a);
  return QubitState::from_matrix(rho);
}

QubitState DissipativeEvolution::schrodinger_state(double t) const {
  const double a = inversion(t);
  const Complex b = coherence(t) * std::polar(1.0, -bath_.omega * t);
  Matrix2 rho;
  rho << 0.5 * (1.0 + a), b, std::conj(b), 0.5 * (1.0 - a);
  return QubitState::from_matrix(rho);
}

std::optional<double> DissipativeEvolution::inversion_zero() const {
  const double c = std::cos(theta0_);
  if (!(c > 0.0) || relax_ == 0.0) return std::nullopt;
  return std::log1p((2.0 * coeffs_.n_eff + 1.0) * c) / relax_;
}

BlochSolution bloch_solution(double t, double theta0, double phi0, const BathSpec& bath) {
  if (!(t >= 0.0)) throw DomainError(fmt::format("bloch_solution: negative time {}", t));
  const DissipativeEvolution evo(theta0, phi0, bath);
  return {evo.sample(t), evo.schrodinger_state(t)};
}

double excited_sign_change_time(const BathSpec& bath) {
  if (!(bath.gamma0 > 0.0)) throw DomainError("sign change time needs gamma0 > 0");
  const auto c = SqueezedBathCoeffs::from(bath);
  return std::log(2.0 * (c.n_eff + 1.0)) / (bath.gamma0 * (2.0 * c.n_eff + 1.0));
}

AffineBlochMap dissipative_bloch_map(double t, const BathSpec& bath) {
  if (!(t >= 0.0)) throw DomainError(fmt::format("dissipative_bloch_map: negative time {}", t));
  const auto c = SqueezedBathCoeffs::from(bath);
  const double relax = bath.gamma0 * (2.0 * c.n_eff + 1.0);
  const double kappa = 0.5 * bath.gamma0 * c.a_rate;
  const double env = std::exp(-0.5 * relax * t);
  const double ch = std::cosh(kappa * t);
  const double sh = std::sinh(kappa * t);
  const double cp = std::cos(bath.squeeze_phi);
  const double sp = std::sin(bath.squeeze_phi);

  AffineBlochMap map;
  map.linear.setZero();
  map.linear(0, 0) = env * (ch + sh * cp);
  map.linear(0, 1) = -env * sh * sp;
  map.linear(1, 0) = -env * sh * sp;
  map.linear(1, 1) = env * (ch - sh * cp);
  map.linear(2, 2) = std::exp(-relax * t);
  map.offset = Eigen::Vector3d(0.0, 0.0, std::expm1(-relax * t) / (2.0 * c.n_eff + 1.0));
  return map;
}

namespace {

std::vector<double> pack(const Matrix2& m) {
  return {m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag(),
          m(1, 0).real(), m(1, 0).imag(), m(1, 1).real(), m(1, 1).imag()};
}

Matrix2 unpack(const std::vector<double>& y) {
  Matrix2 m;
  m << Complex(y[0], y[1]), Complex(y[2], y[3]), Complex(y[4], y[5]), Complex(y[6], y[7]);
  return m;
}

}  // namespace

LindbladTrajectory integrate_lindblad(const Matrix2& rho0, const BathSpec& bath, double t_end,
                                      const OdeSpec& ode) {
  const auto coeffs = SqueezedBathCoeffs::from(bath);
  const double g0 = bath.gamma0;
  const OdeRhs rhs = [&](double, const std::vector<double>& y, std::vector<double>& dydt) {
    dydt = pack(lindblad_rhs(unpack(y), coeffs, g0));
  };
  const OdeSolution sol = integrate_ode(rhs, pack(rho0), 0.0, t_end, ode);
  LindbladTrajectory out;
  out.times = sol.times;
  out.states.reserve(sol.states.size());
  for (const auto& y : sol.states) out.states.push_back(unpack(y));
  return out;
}

LindbladTrajectory integrate_lindblad(double theta0, double phi0, const BathSpec& bath,
                                      double t_end, const OdeSpec& ode) {
  return integrate_lindblad(QubitState::from_angles(theta0, phi0).matrix(), bath, t_end, ode);
}

KrausSet sgad_kraus(double p1, double alpha, double mu, double nu, double phi) {
  auto in_unit = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError(fmt::format("SGAD parameter {} = {} outside [0, 1]", name, v));
    }
  };
  in_unit(p1, "p1");
  in_unit(alpha, "alpha");
  in_unit(mu, "mu");
  in_unit(nu, "nu");
  const double p2 = 1.0 - p1;
  std::vector<Matrix2> ops;
  if (p1 > 0.0) {
    const double w = std::sqrt(p1);
    Matrix2 e0 = Matrix2::Zero();
    e0(0, 0) = w * std::sqrt(1.0 - alpha);
    e0(1, 1) = w;
    Matrix2 e1 = Matrix2::Zero();
    e1(1, 0) = w * std::sqrt(alpha);
    ops.push_back(e0);
    ops.push_back(e1);
  }
  if (p2 > 0.0) {
    const double w = std::sqrt(p2);
    Matrix2 e2 = Matrix2::Zero();
    e2(0, 0) = w * std::sqrt(1.0 - mu);
    e2(1, 1) = w * std::sqrt(1.0 - nu);
    Matrix2 e3 = Matrix2::Zero();
    e3(0, 1) = w * std::sqrt(nu);
    e3(1, 0) = w * std::polar(std::sqrt(mu), -phi);
    ops.push_back(e2);
    ops.push_back(e3);
  }
  return KrausSet(std::move(ops));
}

namespace {

constexpr double kRangeSlack = 1e-9;
constexpr double kReproductionLimit = 1e-7;

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }
bool near_unit(double v) { return v >= -kRangeSlack && v <= 1.0 + kRangeSlack; }

double map_distance(const AffineBlochMap& a, const AffineBlochMap& b) {
  return std::max((a.linear - b.linear).cwiseAbs().maxCoeff(),
                  (a.offset - b.offset).cwiseAbs().maxCoeff());
}

struct Candidate {
  SgadParameters params;
  std::string reject;  // empty when admissible
  double residual = std::numeric_limits<double>::infinity();
};

}  // namespace

SgadChannel sgad_channel(double t, const BathSpec& bath) {
  if (!(t >= 0.0)) throw DomainError(fmt::format("sgad_channel: negative time {}", t));
  const auto c = SqueezedBathCoeffs::from(bath);
  const double n = c.n_eff;
  const double relax = bath.gamma0 * (2.0 * n + 1.0);
  const double x_relax = 0.5 * relax * t;           // g0 (2N+1) t / 2
  const double x_sq = 0.5 * bath.gamma0 * c.a_rate * t;  // g0 a t / 2

  SgadParameters base;
  base.t = t;
  base.phi = bath.squeeze_phi;
  if (x_relax == 0.0) {
    base.note = "identity channel (no elapsed relaxation)";
    return {base, KrausSet::identity()};
  }

  // u = 1 - e^{-g0 (2N+1) t}, s = sinh^2(g0 a t / 2). The root is assembled
  // from forms in which the O(1) parts cancel analytically, so it stays
  // accurate as g0 t -> 0 and is exactly time independent at r = 0.
  const double u = -std::expm1(-relax * t);
  const double e = std::exp(-relax * t);
  const double sh = std::sinh(x_sq);
  const double s = sh * sh;
  const double aux_a =
      n > 0.0 ? (2.0 * n + 1.0) / (2.0 * n) * s / std::sinh(x_relax) * std::exp(-x_relax) : 0.0;
  const double aux_b = n / (2.0 * n + 1.0) * u;
  const double aux_c = aux_a + aux_b + e;
  const double aux_d = std::pow(std::cosh(x_sq), 2) * e;
  base.aux_a = aux_a;
  base.aux_b = aux_b;
  base.aux_c = aux_c;
  base.aux_d = aux_d;

  const double den = u * u - 4.0 * e * s;
  const double num = aux_a * (u - aux_b * (2.0 - u) - 2.0 * e * s) + aux_b * (u - 2.0 * e * s) -
                     e * s * (2.0 - u);
  const double f1 = e * s - aux_a * (u - aux_a);
  const double f2 = e * s - aux_b * (u - aux_b);
  double disc = aux_d * f1 * f2;
  const double disc_scale = std::max(1e-300, aux_d * (e * s + aux_a * u) * (e * s + aux_b * u));
  if (disc < 0.0) {
    if (disc < -1e-10 * disc_scale) {
      throw SgadError(fmt::format("SGAD: no real p2 root at t = {} (discriminant {:.3e})", t, disc),
                      {std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::quiet_NaN()});
    }
    disc = 0.0;
  }
  if (!(std::abs(den) > 0.0)) {
    throw SgadError(fmt::format("SGAD: degenerate p2 quadratic at t = {}", t),
                    {std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN()});
  }
  const double sq = 2.0 * std::sqrt(disc);
  const std::array<double, 2> roots{(num + sq) / den, (num - sq) / den};
  base.roots = roots;

  const AffineBlochMap target = dissipative_bloch_map(t, bath);
  std::array<Candidate, 2> cand;
  for (int k = 0; k < 2; ++k) {
    Candidate& cd = cand[k];
    cd.params = base;
    SgadParameters& p = cd.params;
    const double p2 = roots[k];
    if (!std::isfinite(p2) || !near_unit(p2)) {
      cd.reject = fmt::format("p2 = {:.6g} outside [0, 1]", p2);
      continue;
    }
    p.p2 = clamp_unit(p2);
    p.p1 = 1.0 - p.p2;
    if (p.p2 > 0.0) {
      p.nu = aux_b / p.p2;
      p.mu = aux_a / p.p2;
    }
    if (p.p1 > 0.0) p.alpha = (u - aux_a - aux_b) / p.p1;
    if (p.p2 == 0.0) {
      // Pure amplitude damping: E2, E3 vanish; continue nu = alpha, mu = 0.
      p.mu = 0.0;
      p.nu = p.alpha;
    }
    for (auto [v, name] : {std::pair{&p.alpha, "alpha"}, {&p.mu, "mu"}, {&p.nu, "nu"}}) {
      if (!near_unit(*v)) {
        cd.reject = fmt::format("{} = {:.6g} outside [0, 1]", name, *v);
        break;
      }
      *v = clamp_unit(*v);
    }
    if (!cd.reject.empty()) continue;
    const KrausSet ks = sgad_kraus(p.p1, p.alpha, p.mu, p.nu, p.phi);
    cd.residual = map_distance(affine_map_of(ks), target);
    if (!(cd.residual <= kReproductionLimit)) {
      cd.reject = fmt::format("does not reproduce the evolution (residual {:.3e})", cd.residual);
    }
  }
  for (int k = 0; k < 2; ++k) cand[k].params.reproduction_residual = {cand[0].residual, cand[1].residual};

  const bool ok0 = cand[0].reject.empty();
  const bool ok1 = cand[1].reject.empty();
  if (!ok0 && !ok1) {
    throw SgadError(fmt::format("SGAD: no admissible p2 root at t = {} (roots {:.10g}: {}; "
                                "{:.10g}: {})",
                                t, roots[0], cand[0].reject, roots[1], cand[1].reject),
                    roots);
  }
  int pick = ok0 ? 0 : 1;
  if (ok0 && ok1 && cand[1].residual < cand[0].residual) pick = 1;
  SgadParameters chosen = cand[pick].params;
  chosen.chosen_root = pick;
  chosen.note = (ok0 && ok1) ? fmt::format("both roots admissible; kept root {} (residuals {:.3e}, {:.3e})",
                                           pick, cand[0].residual, cand[1].residual)
                             : fmt::format("root {} rejected: {}", 1 - pick, cand[1 - pick].reject);
  KrausSet ks = sgad_kraus(chosen.p1, chosen.alpha, chosen.mu, chosen.nu, chosen.phi);
  return {chosen, std::move(ks)};
}

GadBlochMap gad_bloch_map(double t, const BathSpec& bath) {
  if (bath.squeeze_r != 0.0) throw DomainError("gad_bloch_map requires zero squeezing");
  if (!(t >= 0.0)) throw DomainError(fmt::format("gad_bloch_map: negative time {}", t));
  const auto c = SqueezedBathCoeffs::from(bath);
  GadBlochMap g;
  g.lambda = -std::expm1(-bath.gamma0 * (2.0 * c.n_th + 1.0) * t);
  g.p = (c.n_th + 1.0) / (2.0 * c.n_th + 1.0);
  const double shrink = std::sqrt(1.0 - g.lambda);
  g.map.linear = Eigen::Vector3d(shrink, shrink, 1.0 - g.lambda).asDiagonal();
  g.map.offset = Eigen::Vector3d(0.0, 0.0, g.lambda * (1.0 - 2.0 * g.p));
  return g;
}

QubitState asymptotic_state(const BathSpec& bath) {
  if (!(bath.gamma0 > 0.0)) throw DomainError("asymptotic state needs gamma0 > 0");
  const auto c = SqueezedBathCoeffs::from(bath);
  const double q = (c.n_eff + 1.0) / (2.0 * c.n_eff + 1.0);
  Matrix2 rho = Matrix2::Zero();
  rho(0, 0) = 1.0 - q;
  rho(1, 1) = q;
  return QubitState::from_matrix(rho);
}

}  // namespace gpq
