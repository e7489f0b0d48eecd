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

#include <cmath>
#include <cstdio>
#include <numbers>

#include "magsteer/error.hpp"
#include "magsteer/sweep.hpp"

namespace magsteer {

double baseline_kappa_c() { return kTwoPi * 5e6; }

SystemParams baseline_params() {
  const double kc = baseline_kappa_c();
  SystemParams p;
  p.delta_c = {0.0, 0.0};
  p.delta_m = {0.0, 0.0};
  p.kappa_c = {kc, kc};
  p.kappa_m = {kc / 5.0, kc / 5.0};
  p.g = {5.0 * kc, 5.0 * kc};
  p.lambda_opa = {0.2 * kc, 0.2 * kc};
  p.theta = std::numbers::pi;
  p.mu_sq = {0.2 * kc, 0.2 * kc};
  p.nu = 0.9 * std::numbers::pi;
  p.r = 1.0;
  p.temperature = 0.1;
  p.omega_m_abs = {kTwoPi * 10e9, kTwoPi * 10e9};
  p.diffusion_convention = DiffusionConvention::derived;
  return p;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2a", "fig2b", "fig3a", "fig3b", "fig4", "fig5"};
  return names;
}

namespace {

std::string gain_suffix(double units_of_kappa) {
  // 0 -> "lambda0", 0.1 -> "lambda0.1"
  char buf[32];
  std::snprintf(buf, sizeof buf, "lambda%g", units_of_kappa);
  return buf;
}

}  // namespace

FigurePreset make_preset(const std::string& name, std::size_t resolution) {
  if (resolution < 1) throw InvalidParameter("preset resolution must be >= 1");
  const double kc = baseline_kappa_c();
  FigurePreset preset;
  preset.name = name;
  preset.base = baseline_params();
  const std::size_t n = resolution;

  if (name == "fig2a") {
    preset.axes = {{"delta_c.0", -5.0 * kc, 5.0 * kc, n}, {"delta_m.0", -5.0 * kc, 5.0 * kc, n}};
  } else if (name == "fig2b") {
    preset.axes = {{"delta_c.1", -5.0 * kc, 5.0 * kc, n}, {"delta_m.1", -5.0 * kc, 5.0 * kc, n}};
  } else if (name == "fig3a") {
    preset.axes = {{"r", 0.0, 2.5, n}, {"temperature", 0.01, 0.5, n}};
  } else if (name == "fig3b") {
    preset.axes = {{"g_ratio", 0.5, 2.0, n}, {"r", 0.0, 2.5, n}};
  } else if (name == "fig4") {
    preset.axes = {{"n_m.both", 0.0, 2.0, n}};
    for (double gain : {0.0, 0.1, 0.2}) {
      SystemParams p = preset.base;
      p.lambda_opa = {gain * kc, gain * kc};
      p.mu_sq = {gain * kc, gain * kc};
      preset.series.push_back({gain_suffix(gain), p});
    }
  } else if (name == "fig5") {
    preset.base.temperature = 0.05;
    preset.base.r = 1.5;
    preset.axes = {{"kappa_c.linked", 0.5e7, 6e7, n}, {"delta_m.0", -3e7, 3e7, n}};
  } else {
    throw InvalidParameter("unknown preset '" + name + "'");
  }
  if (preset.series.empty()) preset.series.push_back({"", preset.base});
  return preset;
}

}  // namespace magsteer
