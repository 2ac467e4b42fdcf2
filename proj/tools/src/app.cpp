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

#include "su2qfi_cli/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "su2qfi_cli/output.hpp"
#include "su2qfi_cli/run.hpp"
#include "su2qfi_cli/scenario.hpp"

namespace su2qfi::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Vec3 parse_vec3(const std::string& text, const char* flag) {
  std::stringstream ss(text);
  std::string item;
  std::vector<double> values;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw InvalidArgument(std::string(flag) + ": cannot parse '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.size() != 3) {
    throw InvalidArgument(std::string(flag) + " expects three comma-separated numbers");
  }
  return Vec3{values[0], values[1], values[2]};
}

// Raw option storage; converted to Params once CLI11 has parsed.
struct ParamOptions {
  double r = 0, theta = 0, phi = 0, omega0 = 0, lambda = 0, omega = 0, t = 0;
  std::string rvec, vvec;
  std::string j = "1";
  CLI::Option* opt_r = nullptr;
  CLI::Option* opt_theta = nullptr;
  CLI::Option* opt_phi = nullptr;
  CLI::Option* opt_omega0 = nullptr;
  CLI::Option* opt_lambda = nullptr;
  CLI::Option* opt_omega = nullptr;
  CLI::Option* opt_t = nullptr;
  CLI::Option* opt_rvec = nullptr;
  CLI::Option* opt_vvec = nullptr;

  void attach(CLI::App* app) {
    opt_r = app->add_option("--r", r, "field amplitude (case1)");
    opt_theta = app->add_option("--theta", theta, "polar angle (case1, default pi/2)");
    opt_phi = app->add_option("--phi", phi, "azimuthal angle (case1, default 0)");
    opt_omega0 = app->add_option("--omega0", omega0, "atomic transition frequency");
    opt_lambda = app->add_option("--lambda", lambda, "Rabi frequency");
    opt_omega = app->add_option("--omega", omega, "driving-field frequency (case3)");
    opt_t = app->add_option("--t", t, "evolution time");
    opt_rvec = app->add_option("--rvec", rvec, "field vector x,y,z (generic)");
    opt_vvec = app->add_option("--vvec", vvec, "velocity dr/dtheta x,y,z (generic)");
    app->add_option("--j", j, "spin quantum number, e.g. 1/2, 1, 3/2")->capture_default_str();
  }

  Params to_params() const {
    Params p;
    const auto take = [](CLI::Option* opt, double value) -> std::optional<double> {
      return opt->count() > 0 ? std::optional<double>(value) : std::nullopt;
    };
    p.r = take(opt_r, r);
    p.theta = take(opt_theta, theta);
    p.phi = take(opt_phi, phi);
    p.omega0 = take(opt_omega0, omega0);
    p.lambda = take(opt_lambda, lambda);
    p.omega = take(opt_omega, omega);
    p.t = take(opt_t, t);
    if (opt_rvec->count() > 0) {
      p.rvec = parse_vec3(rvec, "--rvec");
    }
    if (opt_vvec->count() > 0) {
      p.vvec = parse_vec3(vvec, "--vvec");
    }
    p.j = Spin::parse(j);
    return p;
  }
};

Scenario scenario_or_throw(const std::string& name) {
  const auto s = parse_scenario(name);
  if (!s) {
    std::string known;
    for (const auto& n : scenario_names()) {
      known += (known.empty() ? "" : ", ") + n;
    }
    throw InvalidArgument("unknown scenario '" + name + "' (expected one of: " + known + ")");
  }
  return *s;
}

json params_json(const Params& p) {
  json out = json::object();
  const auto add = [&](const char* name, const std::optional<double>& v) {
    if (v) {
      out[name] = *v;
    }
  };
  add("r", p.r);
  add("theta", p.theta);
  add("phi", p.phi);
  add("omega0", p.omega0);
  add("lambda", p.lambda);
  add("omega", p.omega);
  add("t", p.t);
  if (p.rvec) {
    out["rvec"] = {p.rvec->x(), p.rvec->y(), p.rvec->z()};
  }
  if (p.vvec) {
    out["vvec"] = {p.vvec->x(), p.vvec->y(), p.vvec->z()};
  }
  out["j"] = p.j.value();
  return out;
}

// Writes through `write` to --out (or `fallback` when empty); maps stream
// failures to IoError.
template <typename WriteFn>
void emit(const std::string& path, std::ostream& fallback, WriteFn&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    fallback.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  write(file);
  file.flush();
  if (!file) {
    throw IoError("write to '" + path + "' failed");
  }
}

bool any_residual_exceeds(const std::vector<Row>& rows, double* worst) {
  *worst = 0.0;
  for (const Row& row : rows) {
    if (row.residuals) {
      *worst = std::max({*worst, row.residuals->series, row.residuals->fd});
    }
  }
  return !(*worst <= kValidationThreshold);
}

void run_mqfi(const std::string& scenario_text, const ParamOptions& opts, bool validate, bool as_json,
              std::ostream& out) {
  const Scenario scenario = scenario_or_throw(scenario_text);
  const Params p = opts.to_params();
  const QfiBreakdown f = closed_form(scenario, p);
  std::optional<Residuals> res;
  if (validate) {
    res = oracle_residuals(scenario, p, build_spin_rep(p.j));
  }

  if (as_json) {
    json record;
    record["tool"] = "su2qfi";
    record["version"] = std::string(kToolVersion);
    record["timestamp"] = utc_timestamp();
    record["scenario"] = std::string(scenario_name(scenario));
    record["parameters"] = params_json(p);
    record["total"] = f.total;
    record["quadratic"] = f.quadratic;
    record["oscillatory"] = f.oscillatory;
    if (res) {
      record["residual_series"] = res->series;
      record["residual_fd"] = res->fd;
    }
    out << record.dump(2) << '\n';
  } else {
    out << "scenario     " << scenario_name(scenario) << '\n'
        << "total        " << format_double(f.total) << '\n'
        << "quadratic    " << format_double(f.quadratic) << '\n'
        << "oscillatory  " << format_double(f.oscillatory) << '\n';
    if (res) {
      out << "residual_series " << format_double(res->series) << '\n'
          << "residual_fd     " << format_double(res->fd) << '\n';
    }
  }
  if (res && !(std::max(res->series, res->fd) <= kValidationThreshold)) {
    throw ValidationFailure("closed form disagrees with the numerical oracles (residual " +
                            format_double(std::max(res->series, res->fd)) + ")");
  }
}

void run_sweep(const SweepSpec& spec, bool validate, const std::string& path, std::ostream& out) {
  check_sweep(spec);
  const std::vector<double> grid = linear_grid(spec.start, spec.stop, spec.points);
  const auto rows = evaluate_grid(
      spec.scenario, grid, [&spec](double x) { return sweep_point(spec, x); }, validate, worker_count());
  emit(path, out, [&](std::ostream& os) {
    write_csv(os, run_comment("sweep", spec), sweep_variable_name(spec.variable), rows, validate);
  });
  double worst = 0.0;
  if (validate && any_residual_exceeds(rows, &worst)) {
    throw ValidationFailure("oracle residual " + format_double(worst) + " exceeds " +
                            format_double(kValidationThreshold));
  }
}

void run_figure(const std::string& id, bool validate, const std::string& path, std::ostream& out) {
  const FigurePreset* preset = find_figure(id);
  if (preset == nullptr) {
    std::string known;
    for (const auto& f : figure_presets()) {
      known += (known.empty() ? "" : ", ") + f.id;
    }
    throw InvalidArgument("unknown figure '" + id + "' (expected one of: " + known + ")");
  }
  const SweepSpec& spec = preset->sweep;
  const std::vector<double> grid = linear_grid(spec.start, spec.stop, spec.points);
  const auto rows = evaluate_grid(
      spec.scenario, grid, [preset](double x) { return figure_point(*preset, x); }, validate, worker_count());
  emit(path, out, [&](std::ostream& os) {
    write_csv(os, run_comment(preset->id + ": " + preset->description, spec),
              sweep_variable_name(spec.variable), rows, validate);
  });
  double worst = 0.0;
  if (validate && any_residual_exceeds(rows, &worst)) {
    throw ValidationFailure(id + ": oracle residual " + format_double(worst) + " exceeds " +
                            format_double(kValidationThreshold));
  }
}

void run_optimal_state(const std::string& scenario_text, const ParamOptions& opts, double phase,
                       const std::string& path, std::ostream& out) {
  const Scenario scenario = scenario_or_throw(scenario_text);
  const Params p = opts.to_params();
  const SpinRep rep = build_spin_rep(p.j);
  const Matrix h = closed_form_generator(scenario, p, rep);
  const OptimalStateResult opt = optimal_state(h, phase);

  json record;
  record["scenario"] = std::string(scenario_name(scenario));
  record["parameters"] = params_json(p);
  record["phase"] = phase;
  record["lambda_max"] = opt.lambda_max;
  record["lambda_min"] = opt.lambda_min;
  record["degenerate"] = opt.degenerate;
  record["qfi"] = qfi_of_state(h, opt.state);
  record["mqfi_closed_form"] = closed_form(scenario, p).total;
  json amps = json::array();
  const Vector& a = opt.state.amplitudes();
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    amps.push_back({{"m", rep.j.value() - static_cast<double>(k)}, {"re", a(k).real()}, {"im", a(k).imag()}});
  }
  record["amplitudes"] = std::move(amps);
  emit(path, out, [&](std::ostream& os) { os << record.dump(2) << '\n'; });
}

void run_rotframe(const ParamOptions& opts, long steps, bool as_json, std::ostream& out) {
  Params p = opts.to_params();
  check_params(Scenario::case3_omega, p);
  if (steps < 1) {
    throw InvalidArgument("--steps must be >= 1");
  }
  const SpinRep rep = build_spin_rep(p.j);
  const DrivenSystem sys{*p.omega0, *p.lambda, *p.omega};
  const double t = *p.t;
  const Matrix trotter = trotter_propagator([&](double s) { return driven_hamiltonian(sys, rep, s); }, t, steps);
  const double distance = (rotating_frame(sys, rep).propagator(t) - trotter).norm();
  if (as_json) {
    json record;
    record["parameters"] = params_json(p);
    record["steps"] = steps;
    record["frobenius_distance"] = distance;
    out << record.dump(2) << '\n';
  } else {
    out << "steps               " << steps << '\n'
        << "frobenius_distance  " << format_double(distance) << '\n';
  }
  if (!(distance <= kValidationThreshold)) {
    throw ValidationFailure("rotating-frame factorization differs from the time-ordered product by " +
                            format_double(distance));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal quantum Fisher information for su(2) parametrization processes", "su2qfi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string scenario_text;
  std::string out_path;
  bool validate = false;
  bool as_json = false;
  double phase = 0.0;
  long steps = 100000;

  ParamOptions mqfi_opts;
  auto* mqfi = app.add_subcommand("mqfi", "closed-form maximal QFI at a single point");
  mqfi->add_option("scenario", scenario_text, "scenario id")->required();
  mqfi_opts.attach(mqfi);
  mqfi->add_flag("--validate", validate, "compare with series and finite-difference oracles");
  mqfi->add_flag("--json", as_json, "machine-readable output");

  ParamOptions sweep_opts;
  std::string variable;
  SweepSpec spec;
  auto* sweep = app.add_subcommand("sweep", "evaluate a scenario on a uniform grid, CSV output");
  sweep->add_option("scenario", scenario_text, "scenario id")->required();
  sweep_opts.attach(sweep);
  sweep->add_option("--var", variable, "swept variable: t, Delta, lambda, omega0, theta, phi, r")->required();
  sweep->add_option("--start", spec.start, "first grid value")->required();
  sweep->add_option("--stop", spec.stop, "last grid value")->required();
  sweep->add_option("--points", spec.points, "number of grid points (>= 2)")->required();
  sweep->add_flag("--validate", validate, "append oracle residual columns; exit 3 above 1e-6");
  sweep->add_option("--out", out_path, "output path (default stdout)");

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "regenerate a figure preset as CSV");
  figure->add_option("id", figure_id, "fig1a, fig1b, fig1c, fig1d, fig2a or fig2b")->required();
  figure->add_flag("--validate", validate, "append oracle residual columns; exit 3 above 1e-6");
  figure->add_option("--out", out_path, "output path (default stdout)");

  ParamOptions state_opts;
  auto* state = app.add_subcommand("optimal-state", "optimal input state as JSON");
  state->add_option("scenario", scenario_text, "scenario id")->required();
  state_opts.attach(state);
  state->add_option("--phase", phase, "relative phase between the extreme eigenvectors");
  state->add_option("--out", out_path, "output path (default stdout)");

  ParamOptions frame_opts;
  auto* frame = app.add_subcommand("rotframe", "time-ordered product vs rotating-frame factorization");
  frame_opts.attach(frame);
  frame->add_option("--steps", steps, "Trotter steps")->capture_default_str();
  frame->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameterError;
  }

  try {
    if (mqfi->parsed()) {
      run_mqfi(scenario_text, mqfi_opts, validate, as_json, out);
    } else if (sweep->parsed()) {
      spec.scenario = scenario_or_throw(scenario_text);
      const auto var = parse_sweep_variable(variable);
      if (!var) {
        throw InvalidArgument("unknown sweep variable '" + variable + "'");
      }
      spec.variable = *var;
      spec.fixed = sweep_opts.to_params();
      run_sweep(spec, validate, out_path, out);
    } else if (figure->parsed()) {
      run_figure(figure_id, validate, out_path, out);
    } else if (state->parsed()) {
      run_optimal_state(scenario_text, state_opts, phase, out_path, out);
    } else if (frame->parsed()) {
      run_rotframe(frame_opts, steps, as_json, out);
    }
  } catch (const InvalidArgument& e) {
    err << "su2qfi: parameter error: " << e.what() << '\n';
    return kExitParameterError;
  } catch (const DegenerateField& e) {
    err << "su2qfi: parameter error: " << e.what() << '\n';
    return kExitParameterError;
  } catch (const ValidationFailure& e) {
    err << "su2qfi: validation failed: " << e.what() << '\n';
    return kExitValidationFailure;
  } catch (const IoError& e) {
    err << "su2qfi: I/O error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "su2qfi: error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace su2qfi::cli
