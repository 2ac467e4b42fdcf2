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

#include "su2qfi_cli/run.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

namespace su2qfi::cli {

namespace {

constexpr std::array<std::pair<SweepVariable, std::string_view>, 7> kVariables{{
    {SweepVariable::t, "t"},
    {SweepVariable::delta, "Delta"},
    {SweepVariable::lambda, "lambda"},
    {SweepVariable::omega0, "omega0"},
    {SweepVariable::theta, "theta"},
    {SweepVariable::phi, "phi"},
    {SweepVariable::r, "r"},
}};

bool variable_applies(Scenario s, SweepVariable v) {
  const std::string_view name = scenario_name(s);
  const bool case1 = name.starts_with("case1");
  const bool case2 = name.starts_with("case2");
  const bool case3 = name.starts_with("case3");
  switch (v) {
    case SweepVariable::t:
      return true;
    case SweepVariable::delta:
      return case3;
    case SweepVariable::lambda:
    case SweepVariable::omega0:
      return case2 || case3;
    case SweepVariable::theta:
    case SweepVariable::phi:
    case SweepVariable::r:
      return case1;
  }
  return false;
}

Row evaluate_point(Scenario scenario, double x, const PointFn& point, bool validate) {
  const Params p = point(x);
  Row row;
  row.param = x;
  row.qfi = closed_form(scenario, p);
  if (validate) {
    row.residuals = oracle_residuals(scenario, p, build_spin_rep(p.j));
  }
  return row;
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("SU2QFI_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 4096) {
      throw InvalidArgument(std::string("SU2QFI_THREADS must be a positive integer, got '") + env + "'");
    }
    return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Row> evaluate_grid(Scenario scenario, const std::vector<double>& grid, const PointFn& point,
                               bool validate, unsigned threads) {
  std::vector<Row> rows(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = evaluate_point(scenario, grid[i], point, validate);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next = grid.size();
      }
    }
  };

  const unsigned n = std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(1, grid.size()));
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
      pool.emplace_back(work);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return rows;
}

std::vector<double> linear_grid(double start, double stop, int points) {
  if (points < 2) {
    throw InvalidArgument("grid needs at least 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[i] = std::lerp(start, stop, static_cast<double>(i) / (points - 1));
  }
  return grid;
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  for (const auto& [id, text] : kVariables) {
    if (text == name) {
      return id;
    }
  }
  return std::nullopt;
}

std::string_view sweep_variable_name(SweepVariable v) {
  for (const auto& [id, text] : kVariables) {
    if (id == v) {
      return text;
    }
  }
  return "?";
}

void check_sweep(const SweepSpec& spec) {
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop) || !(spec.start < spec.stop)) {
    throw InvalidArgument("sweep requires finite --start < --stop");
  }
  if (spec.points < 2) {
    throw InvalidArgument("sweep requires --points >= 2");
  }
  if (!variable_applies(spec.scenario, spec.variable)) {
    throw InvalidArgument("variable " + std::string(sweep_variable_name(spec.variable)) +
                          " does not apply to scenario " + std::string(scenario_name(spec.scenario)));
  }
  if (spec.variable == SweepVariable::delta && !spec.fixed.omega0) {
    throw InvalidArgument("sweeping Delta needs --omega0 (omega follows as omega0 - Delta)");
  }
  if (spec.variable == SweepVariable::t && spec.start < 0.0) {
    throw InvalidArgument("--t must be >= 0");
  }
  // Probe both ends so a missing fixed parameter fails before any work starts.
  check_params(spec.scenario, sweep_point(spec, spec.start));
  check_params(spec.scenario, sweep_point(spec, spec.stop));
}

Params sweep_point(const SweepSpec& spec, double x) {
  Params p = spec.fixed;
  switch (spec.variable) {
    case SweepVariable::t:
      p.t = x;
      break;
    case SweepVariable::delta:
      p.omega = p.omega0.value_or(0.0) - x;
      break;
    case SweepVariable::lambda:
      p.lambda = x;
      break;
    case SweepVariable::omega0:
      p.omega0 = x;
      break;
    case SweepVariable::theta:
      p.theta = x;
      break;
    case SweepVariable::phi:
      p.phi = x;
      break;
    case SweepVariable::r:
      p.r = x;
      break;
  }
  return p;
}

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = [] {
    const Spin j1 = Spin::from_twice(2);
    auto static_field = [&](double omega0) {
      Params p;
      p.omega0 = omega0;
      p.lambda = 1.0;
      p.j = j1;
      return p;
    };
    Params driven_delta;
    driven_delta.omega0 = 1.0;
    driven_delta.lambda = 1.0;
    driven_delta.t = 1.0;
    driven_delta.j = j1;
    Params resonant = driven_delta;
    resonant.omega = 1.0;
    resonant.t.reset();

    std::vector<FigurePreset> out;
    out.push_back({"fig1a", "F_omega0 vs t, omega0 = 0.1, lambda = 1",
                   {Scenario::case2_omega0, SweepVariable::t, 0.0, 20.0, 2001, static_field(0.1)}});
    out.push_back({"fig1b", "F_omega0 vs t, omega0 = 1, lambda = 1",
                   {Scenario::case2_omega0, SweepVariable::t, 0.0, 20.0, 2001, static_field(1.0)}});
    out.push_back({"fig1c", "F_omega0 vs t, omega0 = 10, lambda = 1",
                   {Scenario::case2_omega0, SweepVariable::t, 0.0, 20.0, 2001, static_field(10.0)}});
    out.push_back({"fig1d", "F_omega0 vs lambda, omega0 = 1, t = pi/K",
                   {Scenario::case2_omega0, SweepVariable::lambda, 0.0, 1000.0, 20001, static_field(1.0)},
                   true});
    out.push_back({"fig2a", "F_omega vs Delta, lambda = 1, t = 1",
                   {Scenario::case3_omega, SweepVariable::delta, -5.0, 5.0, 1001, driven_delta}});
    out.push_back({"fig2b", "F_omega vs t, Delta = 0, lambda = 1",
                   {Scenario::case3_omega, SweepVariable::t, 0.0, 50.0, 1001, resonant}});
    return out;
  }();
  return presets;
}

const FigurePreset* find_figure(std::string_view id) {
  for (const auto& preset : figure_presets()) {
    if (preset.id == id) {
      return &preset;
    }
  }
  return nullptr;
}

Params figure_point(const FigurePreset& preset, double x) {
  Params p = sweep_point(preset.sweep, x);
  if (preset.t_at_half_period) {
    p.t = std::numbers::pi / std::hypot(p.lambda.value_or(0.0), p.omega0.value_or(0.0));
  }
  return p;
}

}  // namespace su2qfi::cli
