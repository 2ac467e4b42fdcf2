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

#include <benchmark/benchmark.h>

#include "su2qfi/su2qfi.hpp"

namespace {

using namespace su2qfi;

const Vec3 kR{0.3, -1.2, 2.0};
const Vec3 kV{0.7, 0.4, -0.5};
constexpr double kT = 2.5;

SpinRep rep_for(const benchmark::State& state) {
  return build_spin_rep(Spin::from_twice(static_cast<int>(state.range(0))));
}

void BM_AnalyticGenerator(benchmark::State& state) {
  const SpinRep rep = rep_for(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dot_with_j(rep, generator_vector(kR, kV, kT)));
  }
}

void BM_SeriesGenerator(benchmark::State& state) {
  const SpinRep rep = rep_for(state);
  const Matrix h = dot_with_j(rep, kR);
  const Matrix dh = dot_with_j(rep, kV);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generator_series(h, dh, kT, 60).generator);
  }
}

void BM_SlicedSeriesGenerator(benchmark::State& state) {
  const SpinRep rep = rep_for(state);
  const Matrix h = dot_with_j(rep, kR);
  const Matrix dh = dot_with_j(rep, kV);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generator_series_sliced(h, dh, kT, 60));
  }
}

void BM_FiniteDifferenceGenerator(benchmark::State& state) {
  const SpinRep rep = rep_for(state);
  const UnitaryFn u = [&rep](double th) { return hermitian_expm(dot_with_j(rep, kR + th * kV), Complex{0.0, -kT}); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(generator_fd(u, 0.0, default_fd_step(0.0)).generator);
  }
}

void BM_MqfiClosedForm(benchmark::State& state) {
  const Spin j = Spin::from_twice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mqfi_closed_form(j, kR, kV, kT).total);
  }
}

void BM_OptimalState(benchmark::State& state) {
  const SpinRep rep = rep_for(state);
  const Matrix h = dot_with_j(rep, generator_vector(kR, kV, kT));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_state(h).lambda_max);
  }
}

void BM_TrotterPropagator(benchmark::State& state) {
  const SpinRep rep = build_spin_rep(Spin::from_twice(2));
  const DrivenSystem sys{1.0, 1.0, 0.7};
  const long steps = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        trotter_propagator([&](double s) { return driven_hamiltonian(sys, rep, s); }, 2.0, steps));
  }
  state.SetItemsProcessed(state.iterations() * steps);
}

void BM_RotatingFramePropagator(benchmark::State& state) {
  const SpinRep rep = build_spin_rep(Spin::from_twice(2));
  const RotatingFrame frame = rotating_frame(DrivenSystem{1.0, 1.0, 0.7}, rep);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame.propagator(2.0));
  }
}

}  // namespace

BENCHMARK(BM_AnalyticGenerator)->Arg(1)->Arg(2)->Arg(6)->Arg(20);
BENCHMARK(BM_SeriesGenerator)->Arg(1)->Arg(2)->Arg(6)->Arg(20);
BENCHMARK(BM_SlicedSeriesGenerator)->Arg(1)->Arg(2)->Arg(6)->Arg(20);
BENCHMARK(BM_FiniteDifferenceGenerator)->Arg(1)->Arg(2)->Arg(6)->Arg(20);
BENCHMARK(BM_MqfiClosedForm)->Arg(2);
BENCHMARK(BM_OptimalState)->Arg(2)->Arg(20);
BENCHMARK(BM_TrotterPropagator)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RotatingFramePropagator);

BENCHMARK_MAIN();
