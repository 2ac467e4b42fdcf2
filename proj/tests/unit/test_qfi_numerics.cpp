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

#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <numbers>

#include <su2qfi/qfi_numerics.hpp>
#include <su2qfi/su2_generator.hpp>

#include "support/oracles.hpp"

using namespace su2qfi;
using su2qfi::testing::relative_error;
using su2qfi::testing::Rng;

namespace {

UnitaryFn linear_field_propagator(const SpinRep& rep, const Vec3& r, const Vec3& v, double t) {
  return [&rep, r, v, t](double theta) {
    return hermitian_expm(dot_with_j(rep, r + theta * v), Complex{0.0, -t});
  };
}

PureState basis_superposition(int dim, int a, int b) {
  Vector amps = Vector::Zero(dim);
  amps(a) = 1.0;
  amps(b) = 1.0;
  return PureState::normalized(amps);
}

}  // namespace

TEST_CASE("PureState normalizes and rejects the zero vector") {
  Vector v(2);
  v << Complex{3.0, 0.0}, Complex{0.0, 4.0};
  CHECK(PureState::normalized(v).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(PureState::normalized(Vector::Zero(3)), InvalidArgument);
}

TEST_CASE("qfi_of_state examples") {
  const SpinRep half = build_spin_rep(Spin::from_twice(1));
  SUBCASE("eigenvector has zero variance") {
    Vector up = Vector::Zero(2);
    up(0) = 1.0;
    CHECK(qfi_of_state(half.jz, PureState::normalized(up)) == 0.0);
  }
  SUBCASE("-t Jz on the equal superposition gives t^2") {
    const double t = 1.3;
    const PureState plus = basis_superposition(2, 0, 1);
    const Matrix h = -t * half.jz;
    // Brute-force expectation values.
    const Complex m1 = testing::expectation(h, plus.amplitudes());
    const Complex m2 = testing::expectation(h * h, plus.amplitudes());
    const double brute = 4.0 * (m2.real() - m1.real() * m1.real());
    CHECK(brute == doctest::Approx(t * t));
    CHECK(qfi_of_state(h, plus) == doctest::Approx(t * t).epsilon(1e-14));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(qfi_of_state(half.jz, basis_superposition(3, 0, 2)), InvalidArgument);
  }
}

TEST_CASE("qfi_of_state is bounded by the squared spread") {
  Rng rng(3);
  for (int op = 0; op < 10; ++op) {
    const int dim = rng.integer(2, 7);
    const Matrix h = rng.hermitian(dim);
    const double bound = mqfi_of(h);
    double best = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const double f = qfi_of_state(h, PureState::normalized(rng.state(dim)));
      CHECK(f >= 0.0);
      CHECK(f <= bound + 1e-9);
      best = std::max(best, f);
    }
    // Random states do not reach the bound; the optimal state does.
    CHECK(best < bound);
    CHECK(relative_error(optimal_state(h).mqfi(), bound) < 1e-12);
    CHECK(relative_error(qfi_of_state(h, optimal_state(h).state), bound) < 1e-9);
  }
}

TEST_CASE("qfi_of_state invariances") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = rng.integer(2, 8);
    const Matrix h = rng.hermitian(dim);
    const Vector psi = rng.state(dim);
    const double base = qfi_of_state(h, PureState::normalized(psi));
    const Complex phase = std::polar(1.0, rng.uniform(0.0, 6.28));
    const double c = rng.uniform(-10.0, 10.0);
    CHECK(qfi_of_state(h, PureState::normalized(phase * psi)) == doctest::Approx(base).epsilon(1e-12));
    const Matrix shifted = h + c * Matrix::Identity(dim, dim);
    CHECK(std::abs(qfi_of_state(shifted, PureState::normalized(psi)) - base) < 1e-11 * std::max(1.0, base));
  }
}

TEST_CASE("optimal_state examples") {
  SUBCASE("Jz, spin 1/2") {
    const OptimalStateResult opt = optimal_state(build_spin_rep(Spin::from_twice(1)).jz, 0.0);
    CHECK(std::abs(opt.state.amplitudes()(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(opt.state.amplitudes()(1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(qfi_of_state(build_spin_rep(Spin::from_twice(1)).jz, opt.state) == doctest::Approx(1.0));
  }
  SUBCASE("Jz, spin 1, any phase") {
    const Matrix jz = build_spin_rep(Spin::from_twice(2)).jz;
    for (const double phase : {0.0, 0.7, 2.0, 5.5}) {
      CHECK(qfi_of_state(jz, optimal_state(jz, phase).state) == doctest::Approx(4.0).epsilon(1e-14));
    }
  }
  SUBCASE("Jz, spin 5: only m = +-5 populated") {
    const Matrix jz = build_spin_rep(Spin::from_twice(10)).jz;
    const OptimalStateResult opt = optimal_state(jz);
    const Vector& a = opt.state.amplitudes();
    CHECK(std::abs(a(0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(a(10)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    for (int k = 1; k < 10; ++k) {
      CHECK(std::abs(a(k)) < 1e-14);
    }
  }
  SUBCASE("random Hermitian, phase independence") {
    Rng rng(61);
    const Matrix h = rng.hermitian(5);
    const double target = mqfi_of(h);
    for (const double phase : {0.0, std::numbers::pi / 2, std::numbers::pi}) {
      const OptimalStateResult opt = optimal_state(h, phase);
      CHECK(opt.phase == phase);
      CHECK(relative_error(qfi_of_state(h, opt.state), target) < 1e-9);
    }
  }
  SUBCASE("identity is flagged degenerate") {
    const OptimalStateResult opt = optimal_state(2.5 * Matrix::Identity(3, 3));
    CHECK(opt.degenerate);
    CHECK(opt.mqfi() == 0.0);
    CHECK(qfi_of_state(2.5 * Matrix::Identity(3, 3), opt.state) < 1e-24);
  }
  SUBCASE("degenerate extreme eigenspace still attains the spread") {
    Matrix h = Matrix::Zero(4, 4);
    h(0, 0) = 2.0;
    h(1, 1) = 2.0;
    h(2, 2) = -1.0;
    h(3, 3) = 0.5;
    CHECK(qfi_of_state(h, optimal_state(h).state) == doctest::Approx(9.0));
  }
}

TEST_CASE("generator_series") {
  const SpinRep rep = build_spin_rep(Spin::from_twice(2));
  SUBCASE("commuting H and dH leave only -t dH") {
    const Matrix h = 0.7 * rep.jz;
    const Matrix dh = rep.jz;
    for (const int order : {1, 5, 40}) {
      CHECK((generator_series(h, dh, 2.0, order).generator + 2.0 * dh).norm() == 0.0);
    }
  }
  SUBCASE("order 1 is the first partial sum") {
    const Matrix h = dot_with_j(rep, Vec3{0.2, 1.0, -0.4});
    const Matrix dh = dot_with_j(rep, Vec3{1.0, 0.0, 0.3});
    const double t = 0.8;
    // i (i t)^2 / 2 [H, dH] = -i t^2 / 2 [H, dH]
    const Matrix expected = -t * dh + Complex{0.0, -0.5 * t * t} * commutator(h, dh);
    CHECK((generator_series(h, dh, t, 1).generator - expected).norm() < 1e-15);
  }
  SUBCASE("order 40 against the closed form at |r| t = 1") {
    Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
      const Vec3 r = rng.vec3_in_ball(1.0).normalized() * rng.uniform(0.5, 2.0);
      const Vec3 v = rng.vec3_in_ball(2.0);
      const double t = 1.0 / r.norm();
      const SeriesResult s = generator_series(dot_with_j(rep, r), dot_with_j(rep, v), t, 40);
      CHECK((s.generator - dot_with_j(rep, generator_vector(r, v, t))).norm() < 1e-10);
      CHECK(s.tail_bound < 1e-30);
    }
  }
  SUBCASE("sliced evaluation reaches large |r| t") {
    const Vec3 r{0.0, 3.0, 9.5};
    const Vec3 v{0.4, 0.0, 1.0};
    const double t = 20.0;
    const Matrix sliced = generator_series_sliced(dot_with_j(rep, r), dot_with_j(rep, v), t, 40);
    const Matrix exact = dot_with_j(rep, generator_vector(r, v, t));
    CHECK((sliced - exact).norm() < 1e-9 * exact.norm());
  }
  CHECK_THROWS_AS(generator_series(rep.jz, rep.jx, 1.0, 0), InvalidArgument);
}

TEST_CASE("generator_fd examples") {
  const SpinRep rep = build_spin_rep(Spin::from_twice(3));
  SUBCASE("multiplicative case") {
    const double t = 1.4;
    const UnitaryFn u = [&](double th) { return hermitian_expm(rep.jz, Complex{0.0, -th * t}); };
    const FdResult fd = generator_fd(u, 0.6, default_fd_step(0.6));
    CHECK(fd.valid());
    CHECK((fd.generator + t * rep.jz).norm() < 1e-9);
  }
  SUBCASE("constant U gives zero") {
    const Matrix fixed = hermitian_expm(rep.jx, Complex{0.0, -0.3});
    const FdResult fd = generator_fd([&](double) { return fixed; }, 1.0, 1e-5);
    CHECK(fd.generator.norm() == 0.0);
    CHECK(fd.antihermitian_residue == 0.0);
  }
  SUBCASE("static field at omega0 = lambda = 1, t = 1") {
    const SpinRep one = build_spin_rep(Spin::from_twice(2));
    const UnitaryFn u = [&](double w0) {
      return hermitian_expm(dot_with_j(one, Vec3{1.0, 0.0, w0}), Complex{0.0, -1.0});
    };
    const FdResult fd = generator_fd(u, 1.0, default_fd_step(1.0));
    const Matrix exact = dot_with_j(one, generator_vector(Vec3{1, 0, 1}, Vec3{0, 0, 1}, 1.0));
    CHECK((fd.generator - exact).norm() < 1e-8);
  }
  SUBCASE("non-unitary input and bad step are rejected") {
    const UnitaryFn bad = [](double th) { return Matrix(Matrix::Identity(2, 2) * (1.0 + th)); };
    CHECK_THROWS_AS(generator_fd(bad, 0.5, 1e-5), InvalidArgument);
    const UnitaryFn ok = [](double) { return Matrix(Matrix::Identity(2, 2)); };
    CHECK_THROWS_AS(generator_fd(ok, 0.0, 0.0), InvalidArgument);
  }
  SUBCASE("residue scales as h^2 and tracks the true error") {
    const double t = 3.0;
    const Vec3 r{1.0, 0.2, 0.0}, v{0.0, 1.0, 1.0};
    const UnitaryFn u = linear_field_propagator(rep, r, v, t);
    const Matrix exact = dot_with_j(rep, generator_vector(r, v, t));
    const FdResult coarse = generator_fd(u, 0.0, 1e-3);
    const FdResult fine = generator_fd(u, 0.0, 1e-4);
    CHECK(coarse.valid());
    CHECK(coarse.antihermitian_residue / fine.antihermitian_residue == doctest::Approx(100.0).epsilon(0.01));
    const double err = (coarse.generator - exact).norm();
    CHECK(coarse.antihermitian_residue > 0.1 * err);
    CHECK(coarse.antihermitian_residue < 10.0 * err);
  }
  SUBCASE("a family with a kink is flagged invalid") {
    const UnitaryFn kinked = [&](double th) {
      return hermitian_expm(th > 0.0 ? rep.jz : rep.jx, Complex{0.0, -th});
    };
    CHECK_FALSE(generator_fd(kinked, 0.0, 1e-4).valid());
  }
}

TEST_CASE("analytic, series and finite-difference generators agree pairwise") {
  Rng rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const SpinRep rep = build_spin_rep(rng.spin(6));
    const Vec3 r = rng.vec3_in_ball(3.0);
    const Vec3 v = rng.vec3_in_ball(3.0);
    const double t = rng.uniform(0.0, 3.0);
    const Matrix analytic = dot_with_j(rep, generator_vector(r, v, t));
    const Matrix series = generator_series(dot_with_j(rep, r), dot_with_j(rep, v), t, 60).generator;
    const Matrix fd = generator_fd(linear_field_propagator(rep, r, v, t), 0.0, 1e-5).generator;
    CHECK((analytic - series).norm() < 1e-7);
    CHECK((analytic - fd).norm() < 1e-7);
    CHECK((series - fd).norm() < 1e-7);
  }
}

TEST_CASE("state-derivative QFI matches the variance of the FD generator") {
  Rng rng(1618);
  for (int trial = 0; trial < 30; ++trial) {
    const SpinRep rep = build_spin_rep(rng.spin(4));
    const Vec3 r = rng.vec3_in_ball(2.0);
    const Vec3 v = rng.vec3_in_ball(2.0);
    const double t = rng.uniform(0.1, 2.0);
    const UnitaryFn u = linear_field_propagator(rep, r, v, t);
    const PureState psi0 = PureState::normalized(rng.state(rep.dim()));
    const double via_state = qfi_state_fd(u, 0.0, psi0, 1e-5);
    const double via_generator = qfi_of_state(generator_fd(u, 0.0, 1e-5).generator, psi0);
    CHECK(std::abs(via_state - via_generator) < 1e-6 * std::max(1.0, via_generator));
  }
}

TEST_CASE("trotter_propagator") {
  SUBCASE("time-independent H reproduces the exact exponential") {
    Rng rng(10);
    const Matrix h = rng.hermitian(5, 0.5);
    const Matrix u = trotter_propagator([&](double) { return h; }, 1.5, 10000);
    CHECK((u - hermitian_expm(h, Complex{0.0, -1.5})).norm() < 1e-10);
    CHECK(unitarity_defect(u) < 1e-10);
  }
  SUBCASE("error decays as 1/steps^2") {
    const SpinRep rep = build_spin_rep(Spin::from_twice(2));
    const HamiltonianFn h = [&](double s) {
      return Matrix(std::cos(s) * rep.jx + s * rep.jz + 0.3 * s * s * rep.jy);
    };
    const Matrix reference = trotter_propagator(h, 2.0, 40000);
    const double e1 = (trotter_propagator(h, 2.0, 100) - reference).norm();
    const double e2 = (trotter_propagator(h, 2.0, 200) - reference).norm();
    const double e3 = (trotter_propagator(h, 2.0, 400) - reference).norm();
    CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(std::log2(e2 / e3) == doctest::Approx(2.0).epsilon(0.05));
  }
  CHECK_THROWS_AS(trotter_propagator([](double) { return Matrix(Matrix::Identity(2, 2)); }, 1.0, 0),
                  InvalidArgument);
}

TEST_CASE("compose_generators") {
  Rng rng(4);
  const Matrix h1 = rng.hermitian(3);
  const Matrix h2 = rng.hermitian(3);
  const Matrix u2 = hermitian_expm(rng.hermitian(3), Complex{0.0, -0.9});
  CHECK((compose_generators(Matrix::Zero(3, 3), u2, h2) - h2).norm() == 0.0);
  CHECK((compose_generators(h1, Matrix::Identity(3, 3), h2) - (h1 + h2)).norm() < 1e-15);
  CHECK(is_hermitian(compose_generators(h1, u2, h2)));
  CHECK_THROWS_AS(compose_generators(h1, 2.0 * u2, h2), InvalidArgument);
  CHECK_THROWS_AS(compose_generators(h1, Matrix::Identity(2, 2), h2), InvalidArgument);

  // U(theta) = U1(theta) U2(theta): composition against FD of the product.
  const SpinRep rep = build_spin_rep(Spin::from_twice(2));
  const Vec3 r1{0.4, 0.0, 1.0}, v1{0.0, 1.0, 0.0}, r2{1.0, -0.5, 0.2}, v2{0.3, 0.3, -1.0};
  const double t1 = 0.7, t2 = 1.9;
  const UnitaryFn u1_of = linear_field_propagator(rep, r1, v1, t1);
  const UnitaryFn u2_of = linear_field_propagator(rep, r2, v2, t2);
  const Matrix composed = compose_generators(dot_with_j(rep, generator_vector(r1, v1, t1)), u2_of(0.0),
                                             dot_with_j(rep, generator_vector(r2, v2, t2)));
  const FdResult fd = generator_fd([&](double th) { return Matrix(u1_of(th) * u2_of(th)); }, 0.0, 1e-5);
  CHECK((composed - fd.generator).norm() < 1e-8);
}
