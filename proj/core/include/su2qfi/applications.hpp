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

#include "su2qfi/qfi_numerics.hpp"
#include "su2qfi/spin_algebra.hpp"
#include "su2qfi/su2_generator.hpp"

namespace su2qfi {

// Field of amplitude r pointing along (theta, phi):
// r (sin theta cos phi, sin theta sin phi, cos theta).
struct SphericalField {
  double r = 1.0;
  double theta = 0.0;
  double phi = 0.0;

  Vec3 vector() const;
};

enum class SphericalParameter { theta, phi, r };

/// Curve r(param) varying only the selected coordinate of `field`.
FieldCurve spherical_curve(SphericalParameter which, const SphericalField& field);

/// 16 j^2 sin^2(rt/2), 16 j^2 sin^2(theta) sin^2(rt/2), or 4 j^2 t^2.
/// Throws InvalidArgument unless r > 0.
double case1_mqfi(SphericalParameter which, const SphericalField& field, Spin j, double t);

/// H = omega0 Jz + lambda Jx.
struct StaticFieldSystem {
  double omega0 = 0.0;
  double lambda = 0.0;

  double k() const { return std::hypot(lambda, omega0); }
  Vec3 field() const { return {lambda, 0.0, omega0}; }
};

enum class StaticParameter { omega0, lambda };

FieldCurve static_field_curve(StaticParameter which, const StaticFieldSystem& sys);

/// Throws InvalidArgument when K = 0, where the parameter does not enter U.
QfiBreakdown case2_mqfi(StaticParameter which, const StaticFieldSystem& sys, Spin j, double t);

/// H(t) = omega0 Jz + lambda (Jx cos(omega t) + Jy sin(omega t)).
struct DrivenSystem {
  double omega0 = 0.0;
  double lambda = 0.0;
  double omega = 0.0;

  double detuning() const { return omega0 - omega; }
  double k_prime() const { return std::hypot(lambda, detuning()); }
  /// Rotating-frame field (lambda, 0, Delta).
  Vec3 effective_field() const { return {lambda, 0.0, detuning()}; }
};

Matrix driven_hamiltonian(const DrivenSystem& sys, const SpinRep& rep, double t);

/// Factorization U(t) = exp(-i omega t Jz) exp(-i H_eff t) with H_eff = Delta Jz + lambda Jx.
class RotatingFrame {
 public:
  RotatingFrame(const DrivenSystem& sys, const SpinRep& rep);

  const Matrix& h_eff() const noexcept { return h_eff_; }
  Matrix u1(double t) const;
  Matrix u2(double t) const;
  Matrix propagator(double t) const { return u1(t) * u2(t); }

 private:
  double omega_;
  Matrix jz_;
  Matrix h_eff_;
};

RotatingFrame rotating_frame(const DrivenSystem& sys, const SpinRep& rep);

/// A' with generator A' . J for estimating the driving frequency omega.
Vec3 case3_generator_vector_omega(const DrivenSystem& sys, double t);

/// Throws InvalidArgument when K' = 0.
Matrix case3_generator_omega(const DrivenSystem& sys, const SpinRep& rep, double t);

/// Maximal QFI for omega, split as 4 j^2 lambda^2 t^2 / K'^2 plus the bounded
/// remainder 4 j^2 lambda^2 (2 - 2 cos K't - 2 K't sin K't) / K'^4.
QfiBreakdown case3_mqfi_omega_parts(const DrivenSystem& sys, Spin j, double t);

/// 4 j^2 (lambda^2 / K'^4) [2 + K'^2 t^2 - 2 K't sin(K't) - 2 cos(K't)].
double case3_mqfi_omega(const DrivenSystem& sys, Spin j, double t);

/// Static-field formulas with omega0 replaced by the detuning.
QfiBreakdown case3_mqfi_lambda_omega0(StaticParameter which, const DrivenSystem& sys, Spin j,
                                      double t);

}  // namespace su2qfi
