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

#pragma once

#include <array>
#include <functional>
#include <optional>

#include "su2qfi/spin_algebra.hpp"

namespace su2qfi {

/// Parametric field r(theta) for H = r(theta) . J, with velocity v = dr/dtheta.
///
/// When no analytic velocity is supplied, velocity() falls back to a central
/// difference with step 1e-6 * max(1, |theta|). Both callables must be safe to
/// invoke concurrently.
class FieldCurve {
 public:
  using VectorFn = std::function<Vec3(double)>;

  explicit FieldCurve(VectorFn r_of, VectorFn v_of = {});

  /// r(theta) = r0 + (theta - theta0) v, so that velocity() == v everywhere.
  static FieldCurve linear(const Vec3& r0, const Vec3& v, double theta0 = 0.0);

  Vec3 position(double theta) const;
  Vec3 velocity(double theta) const;
  bool has_analytic_velocity() const noexcept { return static_cast<bool>(v_of_); }

  static double difference_step(double theta);

 private:
  VectorFn r_of_;
  VectorFn v_of_;
};

/// v = v_r + v_t with v_r parallel to r and v_t perpendicular to it.
struct VelocitySplit {
  Vec3 v;
  Vec3 v_r;
  Vec3 v_t;
  double r_norm = 0.0;
  double dr_norm_dtheta = 0.0;  // d|r|/dtheta = v . e_r
};

/// Throws DegenerateField when |r| == 0.
VelocitySplit split_velocity(const Vec3& r, const Vec3& v);

/// Vector A with generator = A . J for U = exp(-i t r.J):
///
///   A = (r.v)(sin|r|t - |r|t)/|r|^3 r - sin(|r|t)/|r| v + (1 - cos|r|t)/|r|^2 (r x v)
///
/// Regular at |r| = 0, where it reduces to -t v.
Vec3 generator_vector(const Vec3& r, const Vec3& v, double t);

/// The same vector as three mutually orthogonal pieces along v_r x v_t, v_r and
/// v_t. Undefined when d|r|/dtheta == 0; returns nullopt there.
std::optional<std::array<Vec3, 3>> generator_terms(const VelocitySplit& split, double t);

struct GeneratorResult {
  Vec3 a;
  Matrix h_op;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double t = 0.0;

  double spread() const noexcept { return lambda_max - lambda_min; }
};

/// Throws InvalidArgument for t < 0 or a non-finite velocity.
GeneratorResult analytic_generator(const SpinRep& rep, const FieldCurve& curve, double theta,
                                   double t);

/// Maximal QFI split into the part quadratic in t (radial velocity) and the
/// bounded oscillating part (transverse velocity).
struct QfiBreakdown {
  double total = 0.0;
  double quadratic = 0.0;
  double oscillatory = 0.0;
};

QfiBreakdown mqfi_closed_form(Spin j, const VelocitySplit& split, double t);

/// Convenience overload that also covers |r| == 0 (pure multiplicative limit).
QfiBreakdown mqfi_closed_form(Spin j, const Vec3& r, const Vec3& v, double t);

/// 4 j^2 t^2 |v|^2, the leading small-t behaviour.
double mqfi_small_t(Spin j, const Vec3& v, double t);

}  // namespace su2qfi
