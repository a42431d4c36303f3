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

#include "gpq/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>

#include <boost/numeric/odeint.hpp>
#include <fmt/format.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

namespace gpq {

void QuadratureSpec::validate() const {
  if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || !(rel_tol > 0.0 || abs_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be non-negative with at least one positive");
  }
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be >= 1");
}

namespace {

// GSL's default handler aborts the process; errors are reported through
// return codes instead.
void silence_gsl() {
  static const bool once = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)once;
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};
using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

// Carries a C++ callable through GSL's C callback; exceptions are parked and
// rethrown once GSL returns.
struct Trampoline {
  const RealFunction* f;
  std::exception_ptr error;

  static double call(double x, void* self) {
    auto* t = static_cast<Trampoline*>(self);
    if (t->error) return 0.0;
    try {
      return (*t->f)(x);
    } catch (...) {
      t->error = std::current_exception();
      return 0.0;
    }
  }
};

void check_status(int status, double result, double abserr, const char* where) {
  if (status == GSL_SUCCESS && std::isfinite(result)) return;
  if (status == GSL_SUCCESS) {
    throw QuadratureError(fmt::format("{}: integrand produced a non-finite value", where), result, abserr);
  }
  throw QuadratureError(fmt::format("{}: quadrature did not converge ({}); best estimate {:.12g}, "
                                    "estimated error {:.3e}",
                                    where, gsl_strerror(status), result, abserr),
                        result, abserr);
}

}  // namespace

double integrate_semi_infinite(const RealFunction& f, const QuadratureSpec& spec, double scale) {
  spec.validate();
  if (!(scale > 0.0)) throw DomainError("substitution scale must be positive");
  silence_gsl();

  const RealFunction mapped = [&](double u) {
    const double one_minus = 1.0 - u;
    const double w = scale * u / one_minus;
    if (!std::isfinite(w)) return 0.0;
    const double jac = scale / (one_minus * one_minus);
    const double v = f(w);
    return v == 0.0 ? 0.0 : v * jac;
  };
  Trampoline tr{&mapped, nullptr};
  gsl_function gf{&Trampoline::call, &tr};
  Workspace ws(gsl_integration_workspace_alloc(spec.max_subdivisions));
  double result = 0.0;
  double abserr = 0.0;
  const int status = gsl_integration_qag(&gf, 0.0, 1.0, spec.abs_tol, spec.rel_tol,
                                         spec.max_subdivisions, GSL_INTEG_GAUSS21, ws.get(),
                                         &result, &abserr);
  if (tr.error) std::rethrow_exception(tr.error);
  check_status(status, result, abserr, "integrate_semi_infinite");
  return result;
}

double integrate_interval(const RealFunction& f, double a, double b,
                          std::span<const double> breakpoints, const QuadratureSpec& spec) {
  spec.validate();
  if (!(b > a)) {
    if (a == b) return 0.0;
    throw DomainError("integrate_interval requires a <= b");
  }
  silence_gsl();
  std::vector<double> pts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) pts.push_back(p);
  }
  std::sort(pts.begin() + 1, pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(b);

  Trampoline tr{&f, nullptr};
  gsl_function gf{&Trampoline::call, &tr};
  Workspace ws(gsl_integration_workspace_alloc(spec.max_subdivisions));
  double result = 0.0;
  double abserr = 0.0;
  int status = 0;
  if (pts.size() == 2) {
    status = gsl_integration_qag(&gf, a, b, spec.abs_tol, spec.rel_tol, spec.max_subdivisions,
                                 GSL_INTEG_GAUSS21, ws.get(), &result, &abserr);
  } else {
    status = gsl_integration_qagp(&gf, pts.data(), pts.size(), spec.abs_tol, spec.rel_tol,
                                  spec.max_subdivisions, ws.get(), &result, &abserr);
  }
  if (tr.error) std::rethrow_exception(tr.error);
  check_status(status, result, abserr, "integrate_interval");
  return result;
}

double simpson(std::span<const double> values, double step) {
  const std::size_t n = values.size();
  if (n < 3 || n % 2 == 0) throw DomainError("simpson needs an odd number (>= 3) of samples");
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) (i % 2 ? odd : even) += values[i];
  return step / 3.0 * (values.front() + values.back() + 4.0 * odd + 2.0 * even);
}

OdeSpec OdeSpec::with_steps(double span, std::size_t steps) {
  if (steps == 0) throw DomainError("step count must be positive");
  return {span / static_cast<double>(steps)};
}

void OdeSpec::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("ODE step must be positive");
}

OdeSolution integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                          const OdeSpec& spec) {
  spec.validate();
  if (!(t1 >= t0)) throw DomainError("integrate_ode requires t1 >= t0");
  namespace odeint = boost::numeric::odeint;
  using State = std::vector<double>;

  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil((t1 - t0) / spec.step - 1e-9)));
  const double h = (t1 - t0) / static_cast<double>(steps);

  OdeSolution sol;
  sol.times.reserve(steps + 1);
  sol.states.reserve(steps + 1);
  auto observer = [&](const State& y, double t) {
    for (double v : y) {
      if (!std::isfinite(v)) {
        throw NumericalError(fmt::format("non-finite ODE state at t = {:.12g}", t));
      }
    }
    sol.times.push_back(t);
    sol.states.push_back(y);
  };
  auto system = [&](const State& y, State& dydt, double t) { rhs(t, y, dydt); };

  if (t1 == t0) {
    observer(y0, t0);
    return sol;
  }
  odeint::runge_kutta4<State> stepper;
  odeint::integrate_n_steps(stepper, system, y0, t0, h, steps, observer);
  // Pin the last sample time to t1 (accumulated t0 + k h may differ by an ulp).
  sol.times.back() = t1;
  return sol;
}

}  // namespace gpq
