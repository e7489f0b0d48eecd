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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magsteer/measures.hpp"
#include "magsteer/model.hpp"

namespace magsteer {

/// One swept parameter. `parameter_path` forms:
///   <pair>.0 | <pair>.1 | <pair>.both  for delta_c, delta_m, kappa_c, kappa_m, g,
///                                      lambda_opa, mu_sq, omega_m_abs, n_m
///   theta | nu | r | temperature
///   g_ratio          g_2 = value * g_1
///   kappa_c.linked   kappa_c = value on both cavities, with kappa_m = value/5,
///                    lambda = mu = 0.2 value and g_1 = 5 value (g_2 untouched)
/// `n_m.*` writes n_m_override; a missing component is filled from the
/// thermal occupation of the base parameters. Values use internal units.
struct GridAxis {
  std::string parameter_path;
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

bool is_settable_path(const std::string& path);

/// Throws InvalidParameter on an unknown path.
void apply_axis_value(SystemParams& params, const std::string& path, double value);

/// Throws InvalidParameter describing the first violated axis invariant.
void validate_axis(const GridAxis& axis);

/// `count` equally spaced values, both endpoints included exactly.
std::vector<double> make_grid(const GridAxis& axis);

struct SweepRow {
  std::vector<double> values;  // one per axis
  CorrelationReport report;
  std::string error;  // nonempty when the cell hit a numerical failure

  bool failed() const { return !error.empty(); }
};

struct SweepResult {
  std::vector<GridAxis> axes;
  std::vector<SweepRow> rows;  // row-major over axes
};

/// Evaluates analyze() on a single grid cell; errors are captured in the row.
SweepRow evaluate_cell(const SystemParams& base, std::span<const GridAxis> axes,
                       std::span<const std::vector<double>> grids, std::size_t index);

/// Serial reference implementation.
SweepResult run_sweep_serial(const SystemParams& base, std::span<const GridAxis> axes);

/// OpenMP-parallel sweep; `threads` <= 0 uses the OpenMP default. Output is
/// bitwise identical to run_sweep_serial for any thread count.
SweepResult run_sweep(const SystemParams& base, std::span<const GridAxis> axes, int threads = 0);

/// Per-axis indices of a row-major flat index.
std::vector<std::size_t> unravel_index(std::span<const GridAxis> axes, std::size_t flat);

struct ArgMax {
  std::size_t index = 0;
  std::vector<double> values;
  double e_m = 0.0;
};

/// Grid point of maximal E_m, first occurrence wins; unstable, failed and NaN
/// cells are skipped. Throws NumericalFailure if no cell qualifies.
ArgMax argmax_report(const SweepResult& result);

// ---------------------------------------------------------------------------
// Figure presets

inline constexpr std::size_t kDefaultResolution = 41;

struct PresetSeries {
  std::string suffix;  // empty for single-series presets
  SystemParams base;
};

struct FigurePreset {
  std::string name;
  SystemParams base;
  std::vector<GridAxis> axes;
  std::vector<PresetSeries> series;  // at least one entry
};

/// kappa_c/2pi = 5 MHz, kappa_m = kappa_c/5, g = 5 kappa_c, theta = pi,
/// nu = 0.9 pi, lambda = mu = 0.2 kappa_c, r = 1, T = 100 mK,
/// omega_m = 2pi x 10 GHz, zero detunings.
SystemParams baseline_params();

/// Baseline cavity decay rate 2pi x 5 MHz, in rad/s.
double baseline_kappa_c();

const std::vector<std::string>& preset_names();

/// Throws InvalidParameter for an unknown name.
FigurePreset make_preset(const std::string& name, std::size_t resolution = kDefaultResolution);

}  // namespace magsteer
