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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <su2qfi/su2qfi.hpp>

namespace su2qfi::cli {

enum class Scenario {
  case1_theta,
  case1_phi,
  case1_r,
  case2_omega0,
  case2_lambda,
  case3_omega,
  case3_lambda,
  case3_omega0,
  generic,
};

std::optional<Scenario> parse_scenario(std::string_view name);
std::string_view scenario_name(Scenario s);
std::vector<std::string> scenario_names();

/// Every scenario parameter the CLI knows about. Unset fields are absent.
struct Params {
  std::optional<double> r;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<double> omega0;
  std::optional<double> lambda;
  std::optional<double> omega;
  std::optional<double> t;
  std::optional<Vec3> rvec;
  std::optional<Vec3> vvec;
  Spin j = Spin::from_twice(2);
};

/// Throws InvalidArgument naming the first missing or out-of-range parameter.
void check_params(Scenario s, const Params& p);

/// Closed-form maximal QFI with its two parts.
QfiBreakdown closed_form(Scenario s, const Params& p);

/// Closed-form generator matrix in the spin-j representation.
Matrix closed_form_generator(Scenario s, const Params& p, const SpinRep& rep);

struct Residuals {
  double series = 0.0;
  double fd = 0.0;
};

/// Relative disagreement between the closed form and the two numerical
/// oracles: the larger of the relative MQFI gap and the relative Frobenius gap
/// between generators, each normalized by max(1, |closed form|).
Residuals oracle_residuals(Scenario s, const Params& p, const SpinRep& rep);

inline constexpr int kSeriesOrder = 60;
inline constexpr double kValidationThreshold = 1e-6;

}  // namespace su2qfi::cli
