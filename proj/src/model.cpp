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

#include "magsteer/model.hpp"

#include <cmath>
#include <sstream>

#include "magsteer/error.hpp"

namespace magsteer {

std::string to_string(DiffusionConvention c) {
  return c == DiffusionConvention::derived ? "derived" : "paper";
}

std::optional<DiffusionConvention> parse_convention(const std::string& s) {
  if (s == "derived") return DiffusionConvention::derived;
  if (s == "paper") return DiffusionConvention::paper;
  return std::nullopt;
}

double thermal_occupation(double omega_abs, double temperature) {
  if (!(omega_abs > 0.0)) throw InvalidParameter("omega_abs must be > 0");
  if (!(temperature >= 0.0)) throw InvalidParameter("temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(kHbar * omega_abs / (kBoltzmann * temperature));
}

namespace {

void check_pair(std::vector<std::string>& errors, const char* name, const Pair& v, bool strict) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    const bool ok = std::isfinite(v[j]) && (strict ? v[j] > 0.0 : v[j] >= 0.0);
    if (!ok) {
      std::ostringstream os;
      os << name << "[" << j << "] must be " << (strict ? "> 0" : ">= 0");
      errors.push_back(os.str());
    }
  }
}

void check_finite(std::vector<std::string>& errors, const char* name, const Pair& v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!std::isfinite(v[j])) {
      std::ostringstream os;
      os << name << "[" << j << "] must be finite";
      errors.push_back(os.str());
    }
}

void check_scalar(std::vector<std::string>& errors, const char* name, double v, bool nonneg) {
  if (!std::isfinite(v)) {
    errors.push_back(std::string(name) + " must be finite");
  } else if (nonneg && v < 0.0) {
    errors.push_back(std::string(name) + " must be >= 0");
  }
}

}  // namespace

std::vector<std::string> validate(const SystemParams& p) {
  std::vector<std::string> errors;
  check_finite(errors, "delta_c", p.delta_c);
  check_finite(errors, "delta_m", p.delta_m);
  check_pair(errors, "kappa_c", p.kappa_c, true);
  check_pair(errors, "kappa_m", p.kappa_m, true);
  check_pair(errors, "g", p.g, false);
  check_pair(errors, "lambda_opa", p.lambda_opa, false);
  check_pair(errors, "mu_sq", p.mu_sq, false);
  check_scalar(errors, "theta", p.theta, false);
  check_scalar(errors, "nu", p.nu, false);
  check_scalar(errors, "r", p.r, true);
  check_scalar(errors, "temperature", p.temperature, true);
  if (p.n_m_override) {
    check_pair(errors, "n_m_override", *p.n_m_override, false);
  } else {
    check_pair(errors, "omega_m_abs", p.omega_m_abs, true);
  }
  return errors;
}

void require_valid(const SystemParams& params) {
  const auto errors = validate(params);
  if (errors.empty()) return;
  std::string msg = "invalid parameters:";
  for (const auto& e : errors) msg += " " + e + ";";
  throw InvalidParameter(msg);
}

NoiseMoments noise_moments(const SystemParams& params) {
  require_valid(params);
  NoiseMoments m;
  const double s = std::sinh(params.r);
  m.n_sq = s * s;
  m.m_sq = s * std::cosh(params.r);
  if (params.n_m_override) {
    m.n_m = *params.n_m_override;
  } else {
    for (std::size_t j = 0; j < 2; ++j)
      m.n_m[j] = thermal_occupation(params.omega_m_abs[j], params.temperature);
  }
  return m;
}

DriftMatrix build_drift(const SystemParams& p) {
  require_valid(p);
  using namespace index;
  DriftMatrix drift;
  Mat8& a = drift.a;
  const double cos_t = std::cos(p.theta), sin_t = std::sin(p.theta);
  const double cos_n = std::cos(p.nu), sin_n = std::sin(p.nu);
  for (std::size_t j = 0; j < 2; ++j) {
    const std::size_t Q = cavity_q(j), P = cavity_p(j), q = magnon_q(j), pm = magnon_p(j);
    const double l2 = 2.0 * p.lambda_opa[j];
    const double m2 = 2.0 * p.mu_sq[j];

    // Cavity block with OPA gain.
    a(Q, Q) = -p.kappa_c[j] + l2 * cos_t;
    a(Q, P) = p.delta_c[j] + l2 * sin_t;
    a(P, Q) = -p.delta_c[j] + l2 * sin_t;
    a(P, P) = -p.kappa_c[j] - l2 * cos_t;

    // Magnon block with squeezing gain.
    a(q, q) = -p.kappa_m[j] + m2 * cos_n;
    a(q, pm) = p.delta_m[j] + m2 * sin_n;
    a(pm, q) = -p.delta_m[j] + m2 * sin_n;
    a(pm, pm) = -p.kappa_m[j] - m2 * cos_n;

    // Beam-splitter coupling; both off-diagonal blocks carry [[0, g], [-g, 0]].
    a(Q, pm) = p.g[j];
    a(P, q) = -p.g[j];
    a(q, P) = p.g[j];
    a(pm, Q) = -p.g[j];
  }
  return drift;
}

DiffusionMatrix build_diffusion(const SystemParams& p, const NoiseMoments& nm) {
  require_valid(p);
  using namespace index;
  DiffusionMatrix diffusion;
  Mat8& d = diffusion.d;
  const bool derived = p.diffusion_convention == DiffusionConvention::derived;

  for (std::size_t j = 0; j < 2; ++j) {
    const double cav = derived ? p.kappa_c[j] * (2.0 * nm.n_sq + 1.0) : p.kappa_c[j] * (nm.n_sq + 0.5);
    d(cavity_q(j), cavity_q(j)) = cav;
    d(cavity_p(j), cavity_p(j)) = cav;
    const double mag = p.kappa_m[j] * (2.0 * nm.n_m[j] + 1.0);
    d(magnon_q(j), magnon_q(j)) = mag;
    d(magnon_p(j), magnon_p(j)) = mag;
  }

  const double cross =
      (derived ? 2.0 : 1.0) * std::sqrt(p.kappa_c[0] * p.kappa_c[1]) * nm.m_sq;
  d(cavity_q(0), cavity_q(1)) = cross;
  d(cavity_q(1), cavity_q(0)) = cross;
  d(cavity_p(0), cavity_p(1)) = -cross;
  d(cavity_p(1), cavity_p(0)) = -cross;
  return diffusion;
}

SystemParams swapped_subsystems(const SystemParams& params) {
  SystemParams s = params;
  auto flip = [](Pair& v) { std::swap(v[0], v[1]); };
  flip(s.delta_c);
  flip(s.delta_m);
  flip(s.kappa_c);
  flip(s.kappa_m);
  flip(s.g);
  flip(s.lambda_opa);
  flip(s.mu_sq);
  flip(s.omega_m_abs);
  if (s.n_m_override) flip(*s.n_m_override);
  return s;
}

}  // namespace magsteer
