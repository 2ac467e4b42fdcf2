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

#include <iosfwd>
#include <string>
#include <vector>

#include "su2qfi_cli/run.hpp"

namespace su2qfi::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

/// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

/// `# comment` line, header row, then one row per grid point.
void write_csv(std::ostream& out, const std::string& comment, std::string_view param_name,
               const std::vector<Row>& rows, bool with_residuals);

/// Comment line describing a run: tool version, scenario, fixed parameters
/// and the generation time. This is the only line that varies between runs.
std::string run_comment(std::string_view label, const SweepSpec& spec);

}  // namespace su2qfi::cli
