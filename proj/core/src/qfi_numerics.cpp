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

#include "su2qfi/qfi_numerics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace su2qfi {

namespace {

constexpr double kUnitarityTol = 1e-8;
constexpr double kDegenerateSpread = 1e-12;

void require_square_pair(const Matrix& a, const Matrix& b, const char* where) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw InvalidArgument(std::string(where) + ": dimension mismatch");
  }
}

void require_unitary(const Matrix& u, const char* where) {
  const double defect = unitarity_defect(u);
  if (!(defect <= kUnitarityTol)) {
    std::ostringstream msg;
    msg << where << ": matrix is not unitary (||U^dagger U - I||_F = " << defect << ")";
    throw InvalidArgument(msg.str());
  }
}

// Rotate an eigenvector so that its first largest-magnitude entry is real and
// positive; makes the optimal state independent of eigensolver phase choices.
Vector fix_phase(const Eigen::Ref<const Vector>& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v(k)) > best_abs + 1e-12) {
      best_abs = std::abs(v(k));
      best = k;
    }
  }
  return v * (std::abs(v(best)) / v(best));
}

double spectral_norm(const Matrix& h) {
  const Eigen::VectorXd w = hermitian_eigenvalues(h);
  return std::max(std::abs(w(0)), std::abs(w(w.size() - 1)));
}

}  // namespace

PureState PureState::normalized(Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidArgument("PureState: amplitudes must be finite and nonzero");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

double qfi_of_state(const Matrix& h_op, const PureState& psi) {
  if (h_op.rows() != h_op.cols() || h_op.rows() != psi.dim()) {
    throw InvalidArgument("qfi_of_state: dimension mismatch");
  }
  const Vector& a = psi.amplitudes();
  const Vector h_psi = h_op * a;
  const Complex mean = a.dot(h_psi);  // conjugates the left operand
  // ||(H - <H>) psi||^2 is the variance and is nonnegative by construction.
  return 4.0 * (h_psi - mean.real() * a).squaredNorm();
}

double mqfi_of(const Matrix& h_op) {
  const Eigen::VectorXd w = hermitian_eigenvalues(h_op);
  const double spread = w(w.size() - 1) - w(0);
  return spread * spread;
}

OptimalStateResult optimal_state(const Matrix& h_op, double phase) {
  if (!is_hermitian(h_op)) {
    throw InvalidArgument("optimal_state: operator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h_op);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("optimal_state: eigendecomposition failed");
  }
  const Eigen::Index n = h_op.rows();
  const double lmin = solver.eigenvalues()(0);
  const double lmax = solver.eigenvalues()(n - 1);
  const Vector top = fix_phase(solver.eigenvectors().col(n - 1));
  const Vector bottom = fix_phase(solver.eigenvectors().col(0));

  const bool degenerate = (lmax - lmin) < kDegenerateSpread;
  Vector amplitudes = degenerate ? top : Vector((top + std::polar(1.0, phase) * bottom) / std::sqrt(2.0));
  return OptimalStateResult{PureState::normalized(std::move(amplitudes)), lmax, lmin, phase,
                            degenerate};
}

SeriesResult generator_series(const Matrix& h, const Matrix& dh, double t, int order) {
  require_square_pair(h, dh, "generator_series");
  if (order < 1) {
    throw InvalidArgument("generator_series: order must be >= 1");
  }
  const Complex it{0.0, t};
  Matrix nested = dh;
  Matrix sum = -t * dh;
  Complex coeff = it;  // (i t)^{k+1} / (k+1)! after the update below
  for (int k = 1; k <= order; ++k) {
    nested = commutator(h, nested);
    coeff *= it / static_cast<double>(k + 1);
    sum += (kI * coeff) * nested;
  }

  SeriesResult out;
  out.generator = std::move(sum);
  out.order = order;
  const double x = 2.0 * spectral_norm(h) * std::abs(t);
  const int n = order + 2;
  out.tail_bound = x == 0.0 ? 0.0 : std::exp(n * std::log(x) - std::lgamma(n + 1.0));
  return out;
}

Matrix generator_series_sliced(const Matrix& h, const Matrix& dh, double t, int order) {
  require_square_pair(h, dh, "generator_series_sliced");
  const double x = 2.0 * spectral_norm(h) * std::abs(t);
  int doublings = 0;
  while (std::ldexp(x, -doublings) > 1.0) {
    ++doublings;
  }
  const double slice = std::ldexp(t, -doublings);
  Matrix gen = generator_series(h, dh, slice, order).generator;
  Matrix u = hermitian_expm(h, Complex{0.0, -slice});
  for (int d = 0; d < doublings; ++d) {
    gen = compose_generators(gen, u, gen);
    u = u * u;
  }
  return gen;
}

double default_fd_step(double theta) { return 1e-5 * std::max(1.0, std::abs(theta)); }

FdResult generator_fd(const UnitaryFn& u_of, double theta, double step) {
  if (!(step > 0.0)) {
    throw InvalidArgument("generator_fd: step must be positive");
  }
  const Matrix u = u_of(theta);
  const Matrix u_plus = u_of(theta + step);
  const Matrix u_minus = u_of(theta - step);
  require_unitary(u, "generator_fd");
  require_unitary(u_plus, "generator_fd");
  require_unitary(u_minus, "generator_fd");

  const Matrix d_dagger = (u_plus.adjoint() - u_minus.adjoint()) / (2.0 * step);
  const Matrix m = kI * d_dagger * u;
  FdResult out;
  out.generator = 0.5 * (m + m.adjoint());
  out.antihermitian_residue = (m - m.adjoint()).norm();
  out.step = step;
  const double scale = std::pow(std::max(1.0, out.generator.norm()), 3);
  const double roundoff = 100.0 * std::numeric_limits<double>::epsilon() *
                          static_cast<double>(u.rows()) / step;
  out.residue_budget = 10.0 * step * step * scale + roundoff;
  return out;
}

double qfi_state_fd(const UnitaryFn& u_of, double theta, const PureState& psi0, double step) {
  if (!(step > 0.0)) {
    throw InvalidArgument("qfi_state_fd: step must be positive");
  }
  const Vector& a = psi0.amplitudes();
  const Vector psi = u_of(theta) * a;
  const Vector dpsi = (u_of(theta + step) * a - u_of(theta - step) * a) / (2.0 * step);
  return 4.0 * (dpsi.squaredNorm() - std::norm(psi.dot(dpsi)));
}

Matrix trotter_propagator(const HamiltonianFn& h_of_t, double total_time, long steps) {
  if (steps < 1) {
    throw InvalidArgument("trotter_propagator: steps must be >= 1");
  }
  const double dt = total_time / static_cast<double>(steps);
  Matrix u;
  for (long k = 1; k <= steps; ++k) {
    const Matrix h = h_of_t((static_cast<double>(k) - 0.5) * dt);
    const Matrix step_u = hermitian_expm(h, Complex{0.0, -dt});
    u = (k == 1) ? step_u : Matrix(step_u * u);
  }
  return u;
}

Matrix compose_generators(const Matrix& h1_gen, const Matrix& u2, const Matrix& h2_gen) {
  require_square_pair(h1_gen, h2_gen, "compose_generators");
  require_square_pair(h1_gen, u2, "compose_generators");
  require_unitary(u2, "compose_generators");
  return h2_gen + u2.adjoint() * h1_gen * u2;
}

}  // namespace su2qfi
