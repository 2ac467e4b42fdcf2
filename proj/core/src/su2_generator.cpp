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

#include "su2qfi/su2_generator.hpp"

#include <cmath>
#include <utility>

#include "detail/kernels.hpp"

namespace su2qfi {

FieldCurve::FieldCurve(VectorFn r_of, VectorFn v_of) : r_of_(std::move(r_of)), v_of_(std::move(v_of)) {
  if (!r_of_) {
    throw InvalidArgument("FieldCurve: position function is empty");
  }
}

FieldCurve FieldCurve::linear(const Vec3& r0, const Vec3& v, double theta0) {
  return FieldCurve([r0, v, theta0](double theta) -> Vec3 { return r0 + (theta - theta0) * v; },
                    [v](double) -> Vec3 { return v; });
}

Vec3 FieldCurve::position(double theta) const { return r_of_(theta); }

Vec3 FieldCurve::velocity(double theta) const {
  if (v_of_) {
    return v_of_(theta);
  }
  const double h = difference_step(theta);
  return (r_of_(theta + h) - r_of_(theta - h)) / (2.0 * h);
}

double FieldCurve::difference_step(double theta) { return 1e-6 * std::max(1.0, std::abs(theta)); }

VelocitySplit split_velocity(const Vec3& r, const Vec3& v) {
  const double norm = r.norm();
  if (norm == 0.0) {
    throw DegenerateField("split_velocity: |r| = 0, radial direction undefined");
  }
  const Vec3 e_r = r / norm;
  const double radial = v.dot(e_r);
  VelocitySplit split;
  split.v = v;
  split.v_r = radial * e_r;
  split.v_t = v - split.v_r;
  split.r_norm = norm;
  split.dr_norm_dtheta = radial;
  return split;
}

Vec3 generator_vector(const Vec3& r, const Vec3& v, double t) {
  // Coefficients written as t^k * kernel(|r| t) so that |r| -> 0 is regular.
  const double x = r.norm() * t;
  const double c_radial = t * t * t * detail::sin_minus_x_over_x3(x);
  const double c_velocity = t * detail::sinc(x);
  const double c_cross = t * t * detail::one_minus_cos_over_x2(x);
  return c_radial * r.dot(v) * r - c_velocity * v + c_cross * r.cross(v);
}

std::optional<std::array<Vec3, 3>> generator_terms(const VelocitySplit& split, double t) {
  if (split.dr_norm_dtheta == 0.0) {
    return std::nullopt;
  }
  const double x = split.r_norm * t;
  const double c_cross = (1.0 - std::cos(x)) / (split.r_norm * split.dr_norm_dtheta);
  return std::array<Vec3, 3>{c_cross * split.v_r.cross(split.v_t), -t * split.v_r,
                             -(std::sin(x) / split.r_norm) * split.v_t};
}

GeneratorResult analytic_generator(const SpinRep& rep, const FieldCurve& curve, double theta,
                                   double t) {
  if (!(t >= 0.0)) {
    throw InvalidArgument("analytic_generator: t must be >= 0");
  }
  const Vec3 r = curve.position(theta);
  const Vec3 v = curve.velocity(theta);
  if (!r.allFinite() || !v.allFinite()) {
    throw DegenerateField("analytic_generator: field or velocity is not finite");
  }
  GeneratorResult result;
  result.a = generator_vector(r, v, t);
  result.h_op = dot_with_j(rep, result.a);
  result.lambda_max = rep.j.value() * result.a.norm();
  result.lambda_min = -result.lambda_max;
  result.t = t;
  return result;
}

QfiBreakdown mqfi_closed_form(Spin j, const VelocitySplit& split, double t) {
  const double jj = j.value() * j.value();
  // 4 v_t^2 sin^2(|r|t/2) / r^2 == v_t^2 t^2 sinc^2(|r|t/2)
  const double s = detail::sinc(0.5 * split.r_norm * t);
  QfiBreakdown out;
  out.quadratic = 4.0 * jj * split.v_r.squaredNorm() * t * t;
  out.oscillatory = 4.0 * jj * split.v_t.squaredNorm() * t * t * s * s;
  out.total = out.quadratic + out.oscillatory;
  return out;
}

QfiBreakdown mqfi_closed_form(Spin j, const Vec3& r, const Vec3& v, double t) {
  if (r.norm() == 0.0) {
    QfiBreakdown out;
    out.quadratic = mqfi_small_t(j, v, t);
    out.total = out.quadratic;
    return out;
  }
  return mqfi_closed_form(j, split_velocity(r, v), t);
}

double mqfi_small_t(Spin j, const Vec3& v, double t) {
  const double jj = j.value() * j.value();
  return 4.0 * jj * t * t * v.squaredNorm();
}

}  // namespace su2qfi
