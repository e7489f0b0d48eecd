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

#include "magsteer/sweep.hpp"

#include <cmath>
#include <limits>
#include <string_view>

#include <omp.h>

#include "magsteer/error.hpp"

namespace magsteer {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Pair* pair_field(SystemParams& p, std::string_view name) {
  if (name == "delta_c") return &p.delta_c;
  if (name == "delta_m") return &p.delta_m;
  if (name == "kappa_c") return &p.kappa_c;
  if (name == "kappa_m") return &p.kappa_m;
  if (name == "g") return &p.g;
  if (name == "lambda_opa") return &p.lambda_opa;
  if (name == "mu_sq") return &p.mu_sq;
  if (name == "omega_m_abs") return &p.omega_m_abs;
  return nullptr;
}

double* scalar_field(SystemParams& p, std::string_view name) {
  if (name == "theta") return &p.theta;
  if (name == "nu") return &p.nu;
  if (name == "r") return &p.r;
  if (name == "temperature") return &p.temperature;
  return nullptr;
}

// Which pair members a suffix addresses; nullopt for an unknown suffix.
std::optional<std::pair<bool, bool>> members(std::string_view suffix) {
  if (suffix == "0") return std::pair{true, false};
  if (suffix == "1") return std::pair{false, true};
  if (suffix == "both") return std::pair{true, true};
  return std::nullopt;
}

bool try_apply(SystemParams& p, std::string_view path, double value) {
  if (path == "g_ratio") {
    p.g[1] = value * p.g[0];
    return true;
  }
  if (path == "kappa_c.linked") {
    p.kappa_c = {value, value};
    p.kappa_m = {value / 5.0, value / 5.0};
    p.lambda_opa = {0.2 * value, 0.2 * value};
    p.mu_sq = {0.2 * value, 0.2 * value};
    p.g[0] = 5.0 * value;
    return true;
  }
  if (double* s = scalar_field(p, path)) {
    *s = value;
    return true;
  }
  const auto dot = path.find('.');
  if (dot == std::string_view::npos) return false;
  const auto head = path.substr(0, dot);
  const auto which = members(path.substr(dot + 1));
  if (!which) return false;

  Pair* target = nullptr;
  if (head == "n_m") {
    if (!p.n_m_override) {
      Pair filled{};
      for (std::size_t j = 0; j < 2; ++j) filled[j] = thermal_occupation(p.omega_m_abs[j], p.temperature);
      p.n_m_override = filled;
    }
    target = &*p.n_m_override;
  } else {
    target = pair_field(p, head);
  }
  if (!target) return false;
  if (which->first) (*target)[0] = value;
  if (which->second) (*target)[1] = value;
  return true;
}

}  // namespace

bool is_settable_path(const std::string& path) {
  SystemParams probe;
  probe.omega_m_abs = {1.0, 1.0};
  try {
    return try_apply(probe, path, 0.0);
  } catch (const Error&) {
    return false;
  }
}

void apply_axis_value(SystemParams& params, const std::string& path, double value) {
  if (!try_apply(params, path, value)) throw InvalidParameter("unknown parameter path '" + path + "'");
}

void validate_axis(const GridAxis& axis) {
  if (!is_settable_path(axis.parameter_path))
    throw InvalidParameter("unknown parameter path '" + axis.parameter_path + "'");
  if (axis.count < 1) throw InvalidParameter("axis '" + axis.parameter_path + "': count must be >= 1");
  if (!std::isfinite(axis.start) || !std::isfinite(axis.stop))
    throw InvalidParameter("axis '" + axis.parameter_path + "': bounds must be finite");
  if (axis.stop < axis.start) throw InvalidParameter("axis '" + axis.parameter_path + "': stop must be >= start");
}

std::vector<double> make_grid(const GridAxis& axis) {
  validate_axis(axis);
  if (axis.count == 1) return {axis.start};
  std::vector<double> out(axis.count);
  const double last = static_cast<double>(axis.count - 1);
  for (std::size_t i = 0; i < axis.count; ++i) {
    const double t = static_cast<double>(i) / last;
    out[i] = axis.start * (1.0 - t) + axis.stop * t;
  }
  return out;
}

std::vector<std::size_t> unravel_index(std::span<const GridAxis> axes, std::size_t flat) {
  std::vector<std::size_t> idx(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    idx[k] = flat % axes[k].count;
    flat /= axes[k].count;
  }
  return idx;
}

SweepRow evaluate_cell(const SystemParams& base, std::span<const GridAxis> axes,
                       std::span<const std::vector<double>> grids, std::size_t index) {
  SweepRow row;
  const auto idx = unravel_index(axes, index);
  row.values.resize(axes.size());
  for (std::size_t k = 0; k < axes.size(); ++k) row.values[k] = grids[k][idx[k]];
  try {
    SystemParams p = base;
    for (std::size_t k = 0; k < axes.size(); ++k) apply_axis_value(p, axes[k].parameter_path, row.values[k]);
    row.report = analyze(p);
  } catch (const std::exception& e) {
    row.error = e.what();
    row.report = CorrelationReport{};
    row.report.e_m = row.report.s_ab = row.report.s_ba = row.report.psi_minus = kNaN;
    row.report.margin = kNaN;
  }
  return row;
}

namespace {

struct Prepared {
  std::vector<std::vector<double>> grids;
  std::size_t cells = 1;
};

Prepared prepare(const SystemParams& base, std::span<const GridAxis> axes) {
  if (axes.empty() || axes.size() > 2) throw InvalidParameter("sweep requires one or two axes");
  require_valid(base);
  Prepared prep;
  for (const auto& axis : axes) {
    prep.grids.push_back(make_grid(axis));
    prep.cells *= axis.count;
  }
  return prep;
}

}  // namespace

SweepResult run_sweep_serial(const SystemParams& base, std::span<const GridAxis> axes) {
  const Prepared prep = prepare(base, axes);
  SweepResult result;
  result.axes.assign(axes.begin(), axes.end());
  result.rows.reserve(prep.cells);
  for (std::size_t i = 0; i < prep.cells; ++i) result.rows.push_back(evaluate_cell(base, axes, prep.grids, i));
  return result;
}

SweepResult run_sweep(const SystemParams& base, std::span<const GridAxis> axes, int threads) {
  const Prepared prep = prepare(base, axes);
  SweepResult result;
  result.axes.assign(axes.begin(), axes.end());
  result.rows.resize(prep.cells);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  const auto cells = static_cast<std::ptrdiff_t>(prep.cells);

  // Each cell writes only its own slot.
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
  for (std::ptrdiff_t i = 0; i < cells; ++i)
    result.rows[static_cast<std::size_t>(i)] = evaluate_cell(base, axes, prep.grids, static_cast<std::size_t>(i));
  return result;
}

ArgMax argmax_report(const SweepResult& result) {
  ArgMax best;
  bool found = false;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const auto& row = result.rows[i];
    if (row.failed() || !row.report.stable || std::isnan(row.report.e_m)) continue;
    if (!found || row.report.e_m > best.e_m) {
      best.index = i;
      best.values = row.values;
      best.e_m = row.report.e_m;
      found = true;
    }
  }
  if (!found) throw NumericalFailure("argmax_report: no stable cell in sweep");
  return best;
}

}  // namespace magsteer
