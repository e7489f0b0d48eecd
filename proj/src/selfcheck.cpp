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

#include "magsteer/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "magsteer/measures.hpp"
#include "magsteer/numerics.hpp"
#include "magsteer/sweep.hpp"

namespace magsteer {

namespace {

struct Check {
  std::string name;
  std::function<SelfCheckResult(const SelfCheckOptions&)> run;
};

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

SystemParams vacuum_params(DiffusionConvention convention, double dc, double dm) {
  SystemParams p = baseline_params();
  p.r = 0.0;
  p.temperature = 0.0;
  p.lambda_opa = {0.0, 0.0};
  p.mu_sq = {0.0, 0.0};
  p.delta_c = {dc, -0.5 * dc};
  p.delta_m = {dm, 0.3 * dm};
  p.diffusion_convention = convention;
  return p;
}

SelfCheckResult vacuum_fixed_point(const SelfCheckOptions& opt) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> det(-3.0 * baseline_kappa_c(), 3.0 * baseline_kappa_c());
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const SystemParams p = vacuum_params(opt.convention, det(rng), det(rng));
    const auto sigma = solve_lyapunov(build_drift(p), build_diffusion(p, noise_moments(p)));
    worst = std::max(worst, max_abs(sigma.sigma - 0.5 * Mat8::identity()));
  }
  return {"", worst <= 1e-12, "max |Sigma - I/2| = " + sci(worst)};
}

SelfCheckResult vacuum_physicality(const SelfCheckOptions& opt) {
  const SystemParams p = vacuum_params(opt.convention, 0.0, 0.0);
  const auto sigma = solve_lyapunov(build_drift(p), build_diffusion(p, noise_moments(p)));
  const auto report = physicality_check(sigma);
  return {"", report.ok, report.ok ? "symplectic eigenvalues >= 1/2" : report.message};
}

SelfCheckResult tmsv_log_negativity(const SelfCheckOptions&) {
  double worst = 0.0;
  for (double r : {0.25, 0.5, 1.0, 1.5, 2.0})
    worst = std::max(worst, std::abs(log_negativity(two_mode_squeezed_vacuum(r)) - 2.0 * r));
  return {"", worst <= 1e-12, "max |E - 2r| = " + sci(worst)};
}

SelfCheckResult tmsv_steering(const SelfCheckOptions&) {
  double worst = 0.0;
  for (double r : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    const auto s = steering(two_mode_squeezed_vacuum(r));
    const double expect = std::log(std::cosh(2.0 * r));
    worst = std::max({worst, std::abs(s.s_ab - expect), std::abs(s.s_ba - expect)});
  }
  return {"", worst <= 1e-12, "max |S - ln cosh 2r| = " + sci(worst)};
}

SelfCheckResult lyapunov_residual_check(const SelfCheckOptions&) {
  double worst = 0.0;
  for (const auto& name : preset_names()) {
    for (const auto& series : make_preset(name).series) {
      const auto drift = build_drift(series.base);
      const auto diffusion = build_diffusion(series.base, noise_moments(series.base));
      const auto sigma = solve_lyapunov(drift, diffusion);
      worst = std::max(worst, lyapunov_residual(drift.a, diffusion.d, sigma.sigma));
    }
  }
  return {"", worst <= 1e-10, "max residual over presets = " + sci(worst)};
}

SelfCheckResult ode_oracle(const SelfCheckOptions&) {
  double worst = 0.0;
  for (const auto& name : preset_names()) {
    const auto base = make_preset(name).base;
    const auto drift = build_drift(base);
    const auto diffusion = build_diffusion(base, noise_moments(base));
    const auto direct = solve_lyapunov(drift, diffusion);
    const auto relaxed = relax_to_steady_state(drift, diffusion, 1e-12, 1e-3);
    worst = std::max(worst, max_abs(direct.sigma - relaxed.sigma));
  }
  return {"", worst <= 1e-6, "max |Sigma_lyap - Sigma_ode| = " + sci(worst)};
}

SelfCheckResult separability_r0(const SelfCheckOptions&) {
  SystemParams p = baseline_params();
  p.r = 0.0;
  const auto rep = analyze(p);
  const double worst = std::max({rep.e_m, rep.s_ab, rep.s_ba});
  return {"", rep.stable && worst <= 1e-10, "max(E_m, S_ab, S_ba) at r = 0: " + sci(worst)};
}

SelfCheckResult baseline_entangled(const SelfCheckOptions&) {
  const auto rep = analyze(baseline_params());
  return {"", rep.stable && rep.e_m > 0.0, "E_m at baseline = " + sci(rep.e_m)};
}

const std::vector<Check>& checks() {
  static const std::vector<Check> list = {
      {"vacuum_fixed_point", vacuum_fixed_point},
      {"vacuum_physicality", vacuum_physicality},
      {"tmsv_log_negativity", tmsv_log_negativity},
      {"tmsv_steering", tmsv_steering},
      {"lyapunov_residual", lyapunov_residual_check},
      {"ode_oracle_agreement", ode_oracle},
      {"separability_r0", separability_r0},
      {"baseline_entangled", baseline_entangled},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& selfcheck_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : checks()) out.push_back(c.name);
    return out;
  }();
  return names;
}

std::vector<SelfCheckResult> run_selfcheck(const SelfCheckOptions& options) {
  std::vector<SelfCheckResult> results;
  for (const auto& c : checks()) {
    SelfCheckResult res;
    try {
      res = c.run(options);
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.name = c.name;
    results.push_back(res);
  }
  return results;
}

}  // namespace magsteer
