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

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "su2qfi/errors.hpp"

namespace su2qfi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr Complex kI{0.0, 1.0};

/// Half-integer spin quantum number, stored as the integer 2j.
class Spin {
 public:
  static constexpr int kMaxTwice = 100;  // j <= 50

  /// Throws InvalidArgument unless 1 <= twice_j <= kMaxTwice.
  static Spin from_twice(int twice_j);
  /// Accepts values within 1e-12 of a positive half-integer.
  static Spin from_value(double j);
  /// Parses "1/2", "3/2", "0.5", "2" and the like.
  static Spin parse(std::string_view text);

  int twice() const noexcept { return twice_; }
  double value() const noexcept { return 0.5 * twice_; }
  int dim() const noexcept { return twice_ + 1; }

  friend bool operator==(Spin, Spin) = default;

 private:
  explicit Spin(int twice_j) : twice_(twice_j) {}
  int twice_;
};

/// Spin-j representation of su(2) in the Jz eigenbasis, ordered m = j, j-1, ..., -j.
struct SpinRep {
  Spin j;
  Matrix jx;
  Matrix jy;
  Matrix jz;

  int dim() const noexcept { return j.dim(); }
};

SpinRep build_spin_rep(Spin j);

/// a_x Jx + a_y Jy + a_z Jz. Spectrum is |a| m for m = j..-j.
Matrix dot_with_j(const SpinRep& rep, const Vec3& a);

/// exp(scale * M) for Hermitian M via M = V diag(w) V^dagger.
///
/// Throws InvalidArgument when M is not Hermitian and NumericalError when the
/// eigensolver does not converge.
Matrix hermitian_expm(const Matrix& m, Complex scale);

/// AB - BA. Throws InvalidArgument on shape mismatch.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Largest |M - M^dagger| element.
double hermiticity_defect(const Matrix& m);

/// Hermitian within 1e-12 relative to max(1, max|M_ij|).
bool is_hermitian(const Matrix& m, double tol = 1e-12);

/// ||U^dagger U - I||_F.
double unitarity_defect(const Matrix& u);

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

}  // namespace su2qfi
