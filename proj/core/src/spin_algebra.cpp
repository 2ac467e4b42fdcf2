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

#include "su2qfi/spin_algebra.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

namespace su2qfi {

namespace {

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidArgument("spin: cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

}  // namespace

Spin Spin::from_twice(int twice_j) {
  if (twice_j < 1 || twice_j > kMaxTwice) {
    throw InvalidArgument("spin: 2j must lie in [1, " + std::to_string(kMaxTwice) +
                          "], got " + std::to_string(twice_j));
  }
  return Spin(twice_j);
}

Spin Spin::from_value(double j) {
  if (!std::isfinite(j)) {
    throw InvalidArgument("spin: j must be finite");
  }
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-12) {
    std::ostringstream msg;
    msg << "spin: j = " << j << " is not a half-integer";
    throw InvalidArgument(msg.str());
  }
  if (rounded < 1.0) {
    throw InvalidArgument("spin: j must be positive");
  }
  if (rounded > kMaxTwice) {
    throw InvalidArgument("spin: j must not exceed 50");
  }
  return Spin(static_cast<int>(rounded));
}

Spin Spin::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_number(text.substr(0, slash));
    const double den = parse_number(text.substr(slash + 1));
    if (den != 2.0 && den != 1.0) {
      throw InvalidArgument("spin: fractional j must have denominator 2, got '" +
                            std::string(text) + "'");
    }
    return from_value(num / den);
  }
  return from_value(parse_number(text));
}

SpinRep build_spin_rep(Spin j) {
  const int n = j.dim();
  const int tj = j.twice();
  Matrix raise = Matrix::Zero(n, n);
  // Column k holds m = j - k; J+ maps it to row k - 1.
  for (int k = 1; k < n; ++k) {
    const int tm = tj - 2 * k;
    const double elem = 0.5 * std::sqrt(static_cast<double>(tj * (tj + 2) - tm * (tm + 2)));
    raise(k - 1, k) = elem;
  }
  const Matrix lower = raise.adjoint();

  SpinRep rep{j, Matrix::Zero(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n)};
  rep.jx = 0.5 * (raise + lower);
  rep.jy = (raise - lower) / (2.0 * kI);
  for (int k = 0; k < n; ++k) {
    rep.jz(k, k) = 0.5 * (tj - 2 * k);
  }
  return rep;
}

Matrix dot_with_j(const SpinRep& rep, const Vec3& a) {
  if (!a.allFinite()) {
    throw InvalidArgument("dot_with_j: vector has non-finite components");
  }
  return a.x() * rep.jx + a.y() * rep.jy + a.z() * rep.jz;
}

Matrix hermitian_expm(const Matrix& m, Complex scale) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument("hermitian_expm: matrix is not square");
  }
  if (!is_hermitian(m)) {
    std::ostringstream msg;
    msg << "hermitian_expm: matrix is not Hermitian (defect " << hermiticity_defect(m) << ")";
    throw InvalidArgument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "hermitian_expm: eigendecomposition failed (dim " << m.rows() << ", max|M_ij| "
        << m.cwiseAbs().maxCoeff() << ", hermiticity defect " << hermiticity_defect(m) << ")";
    throw NumericalError(msg.str());
  }
  const Vector phases = (scale * solver.eigenvalues().cast<Complex>()).array().exp();
  const Matrix& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw InvalidArgument("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

double hermiticity_defect(const Matrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    return false;
  }
  if (m.size() == 0) {
    return true;
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return hermiticity_defect(m) <= tol * scale;
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: eigendecomposition failed");
  }
  return solver.eigenvalues();
}

}  // namespace su2qfi
