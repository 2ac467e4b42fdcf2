/*
 * Copyright 2026 The su2qfi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "su2qfi_cli/scenario.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>

namespace su2qfi::cli {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 9> kNames{{
    {Scenario::case1_theta, "case1-theta"},
    {Scenario::case1_phi, "case1-phi"},
    {Scenario::case1_r, "case1-r"},
    {Scenario::case2_omega0, "case2-omega0"},
    {Scenario::case2_lambda, "case2-lambda"},
    {Scenario::case3_omega, "case3-omega"},
    {Scenario::case3_lambda, "case3-lambda"},
    {Scenario::case3_omega0, "case3-omega0"},
    {Scenario::generic, "generic"},
}};

double require(const std::optional<double>& value, const char* flag, Scenario s) {
  if (!value) {
    throw InvalidArgument(std::string("missing ") + flag + " for scenario " +
                          std::string(scenario_name(s)));
  }
  if (!std::isfinite(*value)) {
    throw InvalidArgument(std::string(flag) + " must be finite");
  }
  return *value;
}

bool is_case1(Scenario s) {
  return s == Scenario::case1_theta || s == Scenario::case1_phi || s == Scenario::case1_r;
}

bool is_case2(Scenario s) { return s == Scenario::case2_omega0 || s == Scenario::case2_lambda; }

bool is_case3(Scenario s) {
  return s == Scenario::case3_omega || s == Scenario::case3_lambda || s == Scenario::case3_omega0;
}

SphericalField spherical(const Params& p) {
  return SphericalField{*p.r, p.theta.value_or(std::numbers::pi / 2), p.phi.value_or(0.0)};
}

SphericalParameter spherical_parameter(Scenario s) {
  switch (s) {
    case Scenario::case1_theta:
      return SphericalParameter::theta;
    case Scenario::case1_phi:
      return SphericalParameter::phi;
    default:
      return SphericalParameter::r;
  }
}

StaticParameter static_parameter(Scenario s) {
  return (s == Scenario::case2_omega0 || s == Scenario::case3_omega0) ? StaticParameter::omega0
                                                                       : StaticParameter::lambda;
}

DrivenSystem driven(const Params& p) { return DrivenSystem{*p.omega0, *p.lambda, *p.omega}; }

// What the numerical oracles need: the unitary family in the estimated
// parameter, and the generator rebuilt from the commutator series.
struct OracleProblem {
  double param = 0.0;
  UnitaryFn u_of;
  Matrix series_generator;
  double derivative_scale = 1.0;  // t ||dH|| / ||J||, sets the FD step
};

// Time-independent r(theta).J families (cases 1, 2 and generic).
OracleProblem curve_problem(const FieldCurve& curve, double param, double t, const SpinRep& rep) {
  OracleProblem out;
  out.param = param;
  out.u_of = [curve, t, &rep](double x) {
    return hermitian_expm(dot_with_j(rep, curve.position(x)), Complex{0.0, -t});
  };
  const Vec3 v = curve.velocity(param);
  out.series_generator = generator_series_sliced(dot_with_j(rep, curve.position(param)),
                                                 dot_with_j(rep, v), t, kSeriesOrder);
  out.derivative_scale = t * rep.j.value() * v.norm();
  return out;
}

FieldCurve curve_for(Scenario s, const Params& p, double* param) {
  if (is_case1(s)) {
    const SphericalField field = spherical(p);
    const SphericalParameter which = spherical_parameter(s);
    *param = which == SphericalParameter::theta ? field.theta
             : which == SphericalParameter::phi ? field.phi
                                                : field.r;
    return spherical_curve(which, field);
  }
  if (is_case2(s)) {
    const StaticFieldSystem sys{*p.omega0, *p.lambda};
    const StaticParameter which = static_parameter(s);
    *param = which == StaticParameter::omega0 ? sys.omega0 : sys.lambda;
    return static_field_curve(which, sys);
  }
  *param = 0.0;
  return FieldCurve::linear(*p.rvec, *p.vvec, 0.0);
}

OracleProblem driven_problem(Scenario s, const Params& p, const SpinRep& rep) {
  const DrivenSystem sys = driven(p);
  const double t = *p.t;
  const Matrix h_eff = rotating_frame(sys, rep).h_eff();
  OracleProblem out;
  if (s == Scenario::case3_omega) {
    out.param = sys.omega;
    out.u_of = [sys, t, &rep](double w) {
      DrivenSystem moved = sys;
      moved.omega = w;
      return rotating_frame(moved, rep).propagator(t);
    };
    // omega enters both factors: U1 multiplicatively and H_eff through -Jz.
    const Matrix h2 = generator_series_sliced(h_eff, -rep.jz, t, kSeriesOrder);
    out.series_generator = compose_generators(-t * rep.jz, rotating_frame(sys, rep).u2(t), h2);
    out.derivative_scale = 2.0 * t * rep.j.value();
    return out;
  }
  const bool is_lambda = s == Scenario::case3_lambda;
  out.param = is_lambda ? sys.lambda : sys.omega0;
  out.u_of = [sys, t, is_lambda, &rep](double x) {
    DrivenSystem moved = sys;
    (is_lambda ? moved.lambda : moved.omega0) = x;
    return rotating_frame(moved, rep).propagator(t);
  };
  out.series_generator =
      generator_series_sliced(h_eff, is_lambda ? rep.jx : rep.jz, t, kSeriesOrder);
  out.derivative_scale = t * rep.j.value();
  return out;
}

double relative_gap(double closed, double oracle) {
  return std::abs(closed - oracle) / std::max(1.0, std::abs(closed));
}

double relative_gap(const Matrix& closed, const Matrix& oracle) {
  return (closed - oracle).norm() / std::max(1.0, closed.norm());
}

}  // namespace

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (const auto& [id, text] : kNames) {
    if (text == name) {
      return id;
    }
  }
  return std::nullopt;
}

std::string_view scenario_name(Scenario s) {
  for (const auto& [id, text] : kNames) {
    if (id == s) {
      return text;
    }
  }
  return "unknown";
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& entry : kNames) {
    out.emplace_back(entry.second);
  }
  return out;
}

void check_params(Scenario s, const Params& p) {
  const double t = require(p.t, "--t", s);
  if (t < 0.0) {
    throw InvalidArgument("--t must be >= 0");
  }
  if (is_case1(s)) {
    const double r = require(p.r, "--r", s);
    if (!(r > 0.0)) {
      throw InvalidArgument("--r must be > 0 (field amplitude)");
    }
    for (const auto& [value, flag] : {std::pair{p.theta, "--theta"}, std::pair{p.phi, "--phi"}}) {
      if (value && !std::isfinite(*value)) {
        throw InvalidArgument(std::string(flag) + " must be finite");
      }
    }
    return;
  }
  if (is_case2(s)) {
    const double w0 = require(p.omega0, "--omega0", s);
    const double lam = require(p.lambda, "--lambda", s);
    if (std::hypot(w0, lam) == 0.0) {
      throw InvalidArgument("--omega0 and --lambda cannot both be zero (K = 0)");
    }
    return;
  }
  if (is_case3(s)) {
    const double w0 = require(p.omega0, "--omega0", s);
    const double lam = require(p.lambda, "--lambda", s);
    const double w = require(p.omega, "--omega", s);
    if (std::hypot(lam, w0 - w) == 0.0) {
      throw InvalidArgument("--lambda = 0 with zero detuning leaves omega unobservable (K' = 0)");
    }
    return;
  }
  if (!p.rvec || !p.vvec) {
    throw InvalidArgument("missing --rvec/--vvec for scenario generic");
  }
  if (!p.rvec->allFinite() || !p.vvec->allFinite()) {
    throw InvalidArgument("--rvec and --vvec must be finite");
  }
}

QfiBreakdown closed_form(Scenario s, const Params& p) {
  check_params(s, p);
  const double t = *p.t;
  if (is_case1(s)) {
    const double total = case1_mqfi(spherical_parameter(s), spherical(p), p.j, t);
    QfiBreakdown out;
    out.total = total;
    (s == Scenario::case1_r ? out.quadratic : out.oscillatory) = total;
    return out;
  }
  if (is_case2(s)) {
    return case2_mqfi(static_parameter(s), StaticFieldSystem{*p.omega0, *p.lambda}, p.j, t);
  }
  if (s == Scenario::case3_omega) {
    return case3_mqfi_omega_parts(driven(p), p.j, t);
  }
  if (is_case3(s)) {
    return case3_mqfi_lambda_omega0(static_parameter(s), driven(p), p.j, t);
  }
  return mqfi_closed_form(p.j, *p.rvec, *p.vvec, t);
}

Matrix closed_form_generator(Scenario s, const Params& p, const SpinRep& rep) {
  check_params(s, p);
  const double t = *p.t;
  if (s == Scenario::case3_omega) {
    return case3_generator_omega(driven(p), rep, t);
  }
  if (is_case3(s)) {
    // The parameter is absent from U1, so the generator is that of U2 alone.
    const Vec3 v = s == Scenario::case3_lambda ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 0.0, 1.0};
    return dot_with_j(rep, generator_vector(driven(p).effective_field(), v, t));
  }
  double param = 0.0;
  const FieldCurve curve = curve_for(s, p, &param);
  return analytic_generator(rep, curve, param, t).h_op;
}

Residuals oracle_residuals(Scenario s, const Params& p, const SpinRep& rep) {
  check_params(s, p);
  const double t = *p.t;
  OracleProblem problem;
  if (is_case3(s)) {
    problem = driven_problem(s, p, rep);
  } else {
    double param = 0.0;
    const FieldCurve curve = curve_for(s, p, &param);
    problem = curve_problem(curve, param, t, rep);
  }

  const double closed_f = closed_form(s, p).total;
  const Matrix closed_h = closed_form_generator(s, p, rep);

  const double step = default_fd_step(problem.param) / std::max(1.0, problem.derivative_scale);
  const FdResult fd = generator_fd(problem.u_of, problem.param, step);

  Residuals out;
  out.series = std::max(relative_gap(closed_f, mqfi_of(problem.series_generator)),
                        relative_gap(closed_h, problem.series_generator));
  out.fd = std::max(relative_gap(closed_f, mqfi_of(fd.generator)), relative_gap(closed_h, fd.generator));
  return out;
}

}  // namespace su2qfi::cli
