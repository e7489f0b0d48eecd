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

#include <random>

#include "magsteer/model.hpp"
#include "magsteer/sweep.hpp"

namespace magsteer::testing {

// Random parameters on the scale of the baseline preset (rates ~ 1e7 rad/s).
inline SystemParams random_params(std::mt19937_64& rng) {
  const double kc = baseline_kappa_c();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  SystemParams p = baseline_params();
  for (std::size_t j = 0; j < 2; ++j) {
    p.delta_c[j] = 3.0 * kc * sym(rng);
    p.delta_m[j] = 3.0 * kc * sym(rng);
    p.kappa_c[j] = kc * (0.5 + unit(rng));
    p.kappa_m[j] = 0.2 * kc * (0.5 + unit(rng));
    p.g[j] = 6.0 * kc * unit(rng);
    p.lambda_opa[j] = 0.25 * kc * unit(rng);
    p.mu_sq[j] = 0.05 * kc * unit(rng);
  }
  p.theta = 6.283185307179586 * unit(rng);
  p.nu = 6.283185307179586 * unit(rng);
  p.r = 2.0 * unit(rng);
  p.temperature = 0.5 * unit(rng);
  return p;
}

}  // namespace magsteer::testing
