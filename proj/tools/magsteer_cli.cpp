// Copyright 2026 The magsteer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// magsteer command-line front end.
//
//   magsteer point --config F [--out F2]
//   magsteer sweep --config F [--axis PATH=START:STOP:COUNT] [--axis2 ...] --out F2 [--threads N]
//   magsteer preset NAME --out F2 [--threads N] [--resolution N]
//   magsteer selfcheck [--list] [--convention derived|paper]
//
// Exit codes: 0 success, 1 config/usage/IO error, 2 unstable point,
// 3 numerical failure, 4 self-check failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magsteer/config.hpp"
#include "magsteer/output.hpp"
#include "magsteer/selfcheck.hpp"
#include "magsteer/sweep.hpp"

namespace {

using namespace magsteer;

enum ExitCode : int { kOk = 0, kConfigError = 1, kUnstable = 2, kNumerical = 3, kSelfCheckFailed = 4 };

GridAxis parse_axis_spec(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw ConfigError("axis '" + spec + "' must look like PATH=START:STOP:COUNT");
  GridAxis axis;
  axis.parameter_path = spec.substr(0, eq);
  const std::string range = spec.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : range.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ConfigError("axis '" + spec + "' must look like PATH=START:STOP:COUNT");
  try {
    std::size_t used = 0;
    const std::string start = range.substr(0, c1), stop = range.substr(c1 + 1, c2 - c1 - 1),
                      count = range.substr(c2 + 1);
    axis.start = std::stod(start, &used);
    if (used != start.size()) throw std::invalid_argument(start);
    axis.stop = std::stod(stop, &used);
    if (used != stop.size()) throw std::invalid_argument(stop);
    const long long n = std::stoll(count, &used);
    if (used != count.size() || n < 1) throw std::invalid_argument(count);
    axis.count = static_cast<std::size_t>(n);
  } catch (const std::logic_error&) {
    throw ConfigError("axis '" + spec + "': START, STOP must be numbers and COUNT an integer >= 1");
  }
  try {
    validate_axis(axis);
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  return axis;
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write output file '" + *path + "'");
  out << text;
  if (!out.flush()) throw ConfigError("failed writing output file '" + *path + "'");
}

std::string series_path(const std::string& out, const std::string& suffix) {
  if (suffix.empty()) return out;
  const std::filesystem::path p(out);
  return (p.parent_path() / (p.stem().string() + "_" + suffix + p.extension().string())).string();
}

int cmd_point(const std::string& config_path, const std::optional<std::string>& out) {
  const ConfigFile config = parse_config(config_path);
  const CorrelationReport report = analyze(config.params());
  write_text(out, point_json(report).dump(2) + "\n");
  return report.stable ? kOk : kUnstable;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::string>& axis_specs, const std::string& out,
              std::optional<int> threads) {
  const ConfigFile config = parse_config(config_path);
  std::vector<GridAxis> axes;
  for (const auto& s : axis_specs) axes.push_back(parse_axis_spec(s));
  if (axes.empty()) axes = config.axes;
  if (axes.empty()) throw ConfigError("sweep needs --axis or a sweep/preset section in the config");
  const int nthreads = threads.value_or(config.threads.value_or(0));
  write_text(out, csv_string(run_sweep(config.params(), axes, nthreads)));
  return kOk;
}

int cmd_preset(const std::string& name, const std::string& out, std::optional<int> threads, std::size_t resolution) {
  FigurePreset preset;
  try {
    preset = make_preset(name, resolution);
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  for (const auto& series : preset.series) {
    const std::string path = series_path(out, series.suffix);
    write_text(path, csv_string(run_sweep(series.base, preset.axes, threads.value_or(0))));
    std::cerr << "wrote " << path << "\n";
  }
  return kOk;
}

int cmd_selfcheck(bool list_only, const std::string& convention) {
  if (list_only) {
    for (const auto& name : selfcheck_names()) std::cout << name << "\n";
    return kOk;
  }
  SelfCheckOptions options;
  const auto conv = parse_convention(convention);
  if (!conv) throw ConfigError("--convention must be 'derived' or 'paper'");
  options.convention = *conv;
  bool all = true;
  for (const auto& r : run_selfcheck(options)) {
    std::printf("%-24s %-4s  %s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL", r.detail.c_str());
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "all checks passed" : "self-check FAILED");
  return all ? kOk : kSelfCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state magnon-magnon entanglement and Gaussian steering"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> point_out;
  auto* point = app.add_subcommand("point", "Evaluate one parameter point, JSON output");
  point->add_option("--config", config_path, "JSON config file")->required();
  point->add_option("--out", point_out, "Output file (default stdout)");

  std::vector<std::string> axis1, axis2;
  std::string sweep_out;
  std::optional<int> threads;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a 1-D or 2-D grid, CSV output");
  sweep->add_option("--config", config_path, "JSON config file")->required();
  sweep->add_option("--axis", axis1, "PATH=START:STOP:COUNT (internal units: rad/s, K)")->expected(0, 2);
  sweep->add_option("--axis2", axis2, "Second axis, same syntax")->expected(0, 1);
  sweep->add_option("--out", sweep_out, "CSV output file")->required();
  sweep->add_option("--threads", threads, "OpenMP threads (default: all)");

  std::string preset_name, preset_out;
  std::size_t resolution = kDefaultResolution;
  auto* preset = app.add_subcommand("preset", "Run a figure preset, CSV output");
  preset->add_option("name", preset_name, "fig2a, fig2b, fig3a, fig3b, fig4 or fig5")->required();
  preset->add_option("--out", preset_out, "CSV output file (fig4 writes one file per series)")->required();
  preset->add_option("--threads", threads, "OpenMP threads (default: all)");
  preset->add_option("--resolution", resolution, "Points per axis")->check(CLI::PositiveNumber);

  bool list_only = false;
  std::string convention = "derived";
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the embedded oracle suite");
  selfcheck->add_flag("--list", list_only, "List checks without running them");
  selfcheck->add_option("--convention", convention, "Diffusion convention for the vacuum checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*point) return cmd_point(config_path, point_out);
    if (*sweep) {
      std::vector<std::string> specs = axis1;
      specs.insert(specs.end(), axis2.begin(), axis2.end());
      if (specs.size() > 2) throw ConfigError("at most two axes");
      return cmd_sweep(config_path, specs, sweep_out, threads);
    }
    if (*preset) return cmd_preset(preset_name, preset_out, threads, resolution);
    if (*selfcheck) return cmd_selfcheck(list_only, convention);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InvalidParameter& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kConfigError;
}
