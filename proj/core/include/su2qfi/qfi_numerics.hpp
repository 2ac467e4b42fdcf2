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

#include <functional>

#include "su2qfi/spin_algebra.hpp"

namespace su2qfi {

/// Normalized pure state vector.
class PureState {
 public:
  /// Normalizes `amplitudes`; throws InvalidArgument for the zero vector.
  static PureState normalized(Vector amplitudes);

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }

 private:
  explicit PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {}
  Vector amplitudes_;
};

/// 4 (<H^2> - <H>^2). Throws InvalidArgument on dimension mismatch.
double qfi_of_state(const Matrix& h_op, const PureState& psi);

/// (lambda_max - lambda_min)^2 from a dense eigensolve.
double mqfi_of(const Matrix& h_op);

struct OptimalStateResult {
  PureState state;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double phase = 0.0;
  bool degenerate = false;  // H proportional to the identity, nothing to estimate

  double mqfi() const noexcept { return degenerate ? 0.0 : (lambda_max - lambda_min) * (lambda_max - lambda_min); }
};

/// (|lambda_max> + e^{i phase} |lambda_min>) / sqrt(2).
///
/// Within degenerate extreme eigenspaces the eigensolver's first vector is used.
/// If the spread is below 1e-12 the result is flagged degenerate and the state
/// is the top eigenvector alone.
OptimalStateResult optimal_state(const Matrix& h_op, double phase = 0.0);

struct SeriesResult {
  Matrix generator;
  int order = 0;
  /// (2 ||H||_2 t)^{order+2} / (order+2)!, a bound on the omitted terms relative
  /// to ||dH||.
  double tail_bound = 0.0;
};

/// Truncated nested-commutator expansion of the generator for U = exp(-i t H):
///
///   -t dH + i sum_{k=1}^{order} (i t)^{k+1} / (k+1)! [H, [H, ... [H, dH]]]
SeriesResult generator_series(const Matrix& h, const Matrix& dh, double t, int order);

/// Same expansion evaluated on 2^m equal time slices short enough that
/// 2 ||H||_2 t / 2^m <= 1, then recombined with compose_generators. Usable at
/// any |r| t, where the plain series loses all precision to cancellation.
Matrix generator_series_sliced(const Matrix& h, const Matrix& dh, double t, int order);

using UnitaryFn = std::function<Matrix(double)>;

struct FdResult {
  Matrix generator;              // Hermitian part of i (dU^dagger/dtheta) U
  double antihermitian_residue;  // ||M - M^dagger||_F before symmetrization
  double step;
  double residue_budget;         // residue allowed for a trustworthy result

  bool valid() const noexcept { return antihermitian_residue < residue_budget; }
};

/// 1e-5 * max(1, |theta|).
double default_fd_step(double theta);

/// Central-difference generator i (dU^dagger/dtheta) U at theta.
///
/// Throws InvalidArgument when step <= 0 or any sampled U is not unitary to 1e-8.
FdResult generator_fd(const UnitaryFn& u_of, double theta, double step);

/// 4 (<d psi|d psi> - |<psi|d psi>|^2) for psi(theta) = U(theta) psi0, with the
/// state derivative taken by central differences.
double qfi_state_fd(const UnitaryFn& u_of, double theta, const PureState& psi0, double step);

using HamiltonianFn = std::function<Matrix(double)>;

/// Midpoint product exp(-i H(t_N) dt) ... exp(-i H(t_1) dt), t_k = (k - 1/2) dt.
Matrix trotter_propagator(const HamiltonianFn& h_of_t, double total_time, long steps);

/// Generator of U = U1 U2 from the generators of its factors: H2 + U2^dagger H1 U2.
Matrix compose_generators(const Matrix& h1_gen, const Matrix& u2, const Matrix& h2_gen);

}  // namespace su2qfi
