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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su2qfi_cli/scenario.hpp"

namespace su2qfi::cli {

struct Row {
  double param = 0.0;
  QfiBreakdown qfi;
  std::optional<Residuals> residuals;
};

using PointFn = std::function<Params(double)>;

/// Worker count from SU2QFI_THREADS, else the number of logical processors.
/// Throws InvalidArgument for a malformed or non-positive override.
unsigned worker_count();

/// Evaluates every grid point on a pool of `threads` workers. Rows come back in
/// grid order regardless of completion order.
std::vector<Row> evaluate_grid(Scenario scenario, const std::vector<double>& grid, const PointFn& point,
                               bool validate, unsigned threads);

/// `points` values from start to stop inclusive, via std::lerp so both ends and
/// symmetric midpoints are exact.
std::vector<double> linear_grid(double start, double stop, int points);

enum class SweepVariable { t, delta, lambda, omega0, theta, phi, r };

std::optional<SweepVariable> parse_sweep_variable(std::string_view name);
std::string_view sweep_variable_name(SweepVariable v);

struct SweepSpec {
  Scenario scenario = Scenario::generic;
  SweepVariable variable = SweepVariable::t;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  Params fixed;
};

/// Throws InvalidArgument when the grid is malformed, the variable does not
/// belong to the scenario, or a fixed parameter is missing.
void check_sweep(const SweepSpec& spec);

/// Fixed parameters with the swept variable set to x. Sweeping Delta keeps
/// omega0 and moves omega = omega0 - Delta.
Params sweep_point(const SweepSpec& spec, double x);

struct FigurePreset {
  std::string id;
  std::string description;
  SweepSpec sweep;
  bool t_at_half_period = false;  // t = pi / K at each point
};

const std::vector<FigurePreset>& figure_presets();
const FigurePreset* find_figure(std::string_view id);
Params figure_point(const FigurePreset& preset, double x);

}  // namespace su2qfi::cli
