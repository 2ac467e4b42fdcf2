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

#include "su2qfi/applications.hpp"

#include <cmath>
#include <sstream>

#include "detail/kernels.hpp"

namespace su2qfi {

namespace {

double sin_sq(double x) {
  const double s = std::sin(x);
  return s * s;
}

void require_positive_k(double k, const char* where) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    std::ostringstream msg;
    msg << where << ": field norm must be positive and finite (got " << k
        << "); the parameter is unobservable when both couplings vanish";
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

Vec3 SphericalField::vector() const {
  return r * Vec3{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

FieldCurve spherical_curve(SphericalParameter which, const SphericalField& field) {
  const SphericalField f = field;
  switch (which) {
    case SphericalParameter::theta:
      return FieldCurve(
          [f](double th) -> Vec3 { return SphericalField{f.r, th, f.phi}.vector(); },
          [f](double th) -> Vec3 {
            return f.r * Vec3{std::cos(th) * std::cos(f.phi), std::cos(th) * std::sin(f.phi),
                              -std::sin(th)};
          });
    case SphericalParameter::phi:
      return FieldCurve(
          [f](double ph) -> Vec3 { return SphericalField{f.r, f.theta, ph}.vector(); },
          [f](double ph) -> Vec3 {
            return f.r * std::sin(f.theta) * Vec3{-std::sin(ph), std::cos(ph), 0.0};
          });
    case SphericalParameter::r:
      break;
  }
  return FieldCurve([f](double amp) -> Vec3 { return SphericalField{amp, f.theta, f.phi}.vector(); },
                    [f](double) -> Vec3 { return SphericalField{1.0, f.theta, f.phi}.vector(); });
}

double case1_mqfi(SphericalParameter which, const SphericalField& field, Spin j, double t) {
  if (!(field.r > 0.0) || !std::isfinite(field.r)) {
    throw InvalidArgument("case1_mqfi: field amplitude r must be positive");
  }
  const double jj = j.value() * j.value();
  switch (which) {
    case SphericalParameter::theta:
      return 16.0 * jj * sin_sq(0.5 * field.r * t);
    case SphericalParameter::phi:
      return 16.0 * jj * sin_sq(field.theta) * sin_sq(0.5 * field.r * t);
    case SphericalParameter::r:
      break;
  }
  return 4.0 * jj * t * t;
}

FieldCurve static_field_curve(StaticParameter which, const StaticFieldSystem& sys) {
  if (which == StaticParameter::omega0) {
    return FieldCurve::linear(sys.field(), Vec3{0.0, 0.0, 1.0}, sys.omega0);
  }
  return FieldCurve::linear(sys.field(), Vec3{1.0, 0.0, 0.0}, sys.lambda);
}

QfiBreakdown case2_mqfi(StaticParameter which, const StaticFieldSystem& sys, Spin j, double t) {
  const double k = sys.k();
  require_positive_k(k, "case2_mqfi");
  const double jj = j.value() * j.value();
  const double along = which == StaticParameter::omega0 ? sys.omega0 : sys.lambda;
  const double across = which == StaticParameter::omega0 ? sys.lambda : sys.omega0;
  const double radial_sq = (along / k) * (along / k);
  const double transverse_sq = (across / k) * (across / k);
  // 4 across^2 / K^4 sin^2(Kt/2) == (across/K)^2 t^2 sinc^2(Kt/2)
  const double s = detail::sinc(0.5 * k * t);
  QfiBreakdown out;
  out.quadratic = 4.0 * jj * radial_sq * t * t;
  out.oscillatory = 4.0 * jj * transverse_sq * t * t * s * s;
  out.total = out.quadratic + out.oscillatory;
  return out;
}

Matrix driven_hamiltonian(const DrivenSystem& sys, const SpinRep& rep, double t) {
  const double phase = sys.omega * t;
  return sys.omega0 * rep.jz + sys.lambda * (std::cos(phase) * rep.jx + std::sin(phase) * rep.jy);
}

RotatingFrame::RotatingFrame(const DrivenSystem& sys, const SpinRep& rep)
    : omega_(sys.omega), jz_(rep.jz), h_eff_(sys.detuning() * rep.jz + sys.lambda * rep.jx) {}

Matrix RotatingFrame::u1(double t) const {
  const Vector phases = (Complex{0.0, -omega_ * t} * jz_.diagonal()).array().exp();
  return phases.asDiagonal();
}

Matrix RotatingFrame::u2(double t) const { return hermitian_expm(h_eff_, Complex{0.0, -t}); }

RotatingFrame rotating_frame(const DrivenSystem& sys, const SpinRep& rep) {
  return RotatingFrame(sys, rep);
}

Vec3 case3_generator_vector_omega(const DrivenSystem& sys, double t) {
  const double kp = sys.k_prime();
  require_positive_k(kp, "case3_generator_omega");
  const double x = kp * t;
  const double lam = sys.lambda;
  const double delta = sys.detuning();
  const double c_xz = t * t * t * detail::sin_minus_xcos_over_x3(x);
  const double c_y = t * t * detail::one_minus_cos_minus_xsin_over_x2(x);
  return Vec3{-lam * delta * c_xz, lam * c_y, lam * lam * c_xz};
}

Matrix case3_generator_omega(const DrivenSystem& sys, const SpinRep& rep, double t) {
  return dot_with_j(rep, case3_generator_vector_omega(sys, t));
}

QfiBreakdown case3_mqfi_omega_parts(const DrivenSystem& sys, Spin j, double t) {
  const double kp = sys.k_prime();
  require_positive_k(kp, "case3_mqfi_omega");
  const double jj = j.value() * j.value();
  const double lam_sq = sys.lambda * sys.lambda;
  const double t2 = t * t;
  QfiBreakdown out;
  out.total = 4.0 * jj * lam_sq * t2 * t2 * detail::driven_frequency_kernel(kp * t);
  out.quadratic = 4.0 * jj * (lam_sq / (kp * kp)) * t2;
  out.oscillatory = out.total - out.quadratic;
  return out;
}

double case3_mqfi_omega(const DrivenSystem& sys, Spin j, double t) {
  return case3_mqfi_omega_parts(sys, j, t).total;
}

QfiBreakdown case3_mqfi_lambda_omega0(StaticParameter which, const DrivenSystem& sys, Spin j,
                                      double t) {
  require_positive_k(sys.k_prime(), "case3_mqfi_lambda_omega0");
  return case2_mqfi(which, StaticFieldSystem{sys.detuning(), sys.lambda}, j, t);
}

}  // namespace su2qfi
