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

#include "su2qfi_cli/output.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <sstream>

namespace su2qfi::cli {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_csv(std::ostream& out, const std::string& comment, std::string_view param_name,
               const std::vector<Row>& rows, bool with_residuals) {
  out << "# " << comment << '\n';
  out << param_name << ",total,quadratic,oscillatory";
  if (with_residuals) {
    out << ",residual_series,residual_fd";
  }
  out << '\n';
  for (const Row& row : rows) {
    out << format_double(row.param) << ',' << format_double(row.qfi.total) << ','
        << format_double(row.qfi.quadratic) << ',' << format_double(row.qfi.oscillatory);
    if (with_residuals && row.residuals) {
      out << ',' << format_double(row.residuals->series) << ',' << format_double(row.residuals->fd);
    }
    out << '\n';
  }
}

std::string run_comment(std::string_view label, const SweepSpec& spec) {
  std::ostringstream s;
  s << "su2qfi " << kToolVersion << " | " << label << " | scenario=" << scenario_name(spec.scenario)
    << " | variable=" << sweep_variable_name(spec.variable) << " in [" << format_double(spec.start) << ", "
    << format_double(spec.stop) << "] x " << spec.points << " | j=" << format_double(spec.fixed.j.value());
  const auto add = [&](const char* name, const std::optional<double>& v) {
    if (v) {
      s << ' ' << name << '=' << format_double(*v);
    }
  };
  add("r", spec.fixed.r);
  add("theta", spec.fixed.theta);
  add("phi", spec.fixed.phi);
  add("omega0", spec.fixed.omega0);
  add("lambda", spec.fixed.lambda);
  add("omega", spec.fixed.omega);
  add("t", spec.fixed.t);
  s << " | generated " << utc_timestamp();
  return s.str();
}

}  // namespace su2qfi::cli
