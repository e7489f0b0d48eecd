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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "magsteer/matrix.hpp"

namespace magsteer {

using Pair = std::array<double, 2>;

/// Selects how the cavity rows of the diffusion matrix are normalized.
///
/// `derived` follows from symmetrizing the input-noise correlations with the
/// sqrt(2 kappa) input coupling: cavity variance kappa (2N + 1), cross term
/// 2 sqrt(kappa_1 kappa_2) M. `paper` uses the alternative normalization
/// kappa (N + 1/2) and sqrt(kappa_1 kappa_2) M; it drives the cavities below
/// vacuum noise and is kept only for comparison.
enum class DiffusionConvention { derived, paper };

std::string to_string(DiffusionConvention c);
std::optional<DiffusionConvention> parse_convention(const std::string& s);

/// Physical inputs of the two cavity-magnon pairs. All rates are angular
/// (rad/s); index 0 is subsystem 1 (Alice's magnon), index 1 subsystem 2.
struct SystemParams {
  Pair delta_c{0.0, 0.0};
  Pair delta_m{0.0, 0.0};
  Pair kappa_c{1.0, 1.0};
  Pair kappa_m{1.0, 1.0};
  Pair g{0.0, 0.0};
  Pair lambda_opa{0.0, 0.0};
  double theta = 0.0;
  Pair mu_sq{0.0, 0.0};
  double nu = 0.0;
  double r = 0.0;
  double temperature = 0.0;  // kelvin
  Pair omega_m_abs{1.0, 1.0};  // only enters the thermal occupation
  std::optional<Pair> n_m_override;
  DiffusionConvention diffusion_convention = DiffusionConvention::derived;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Bath statistics: N = sinh^2 r, M = sinh r cosh r, and per-magnon thermal
/// occupations.
struct NoiseMoments {
  double n_sq = 0.0;
  double m_sq = 0.0;
  Pair n_m{0.0, 0.0};
};

/// Quadrature ordering shared by every 8x8 matrix in the library.
namespace index {
inline constexpr std::size_t cavity_q(std::size_t j) { return 2 * j; }
inline constexpr std::size_t cavity_p(std::size_t j) { return 2 * j + 1; }
inline constexpr std::size_t magnon_q(std::size_t j) { return 4 + 2 * j; }
inline constexpr std::size_t magnon_p(std::size_t j) { return 5 + 2 * j; }
}  // namespace index

/// Drift matrix over [dQ1, dP1, dQ2, dP2, dq1, dp1, dq2, dp2].
struct DriftMatrix {
  Mat8 a;
};

struct DiffusionMatrix {
  Mat8 d;
};

// Physical constants (CODATA 2018, exact SI values for k_B).
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
inline constexpr double kTwoPi = 6.283185307179586;

/// Bose-Einstein occupation 1 / (exp(hbar w / k_B T) - 1); exactly 0 at T = 0.
/// Throws InvalidParameter for omega_abs <= 0 or temperature < 0.
double thermal_occupation(double omega_abs, double temperature);

/// Every violated invariant, one message per field. Empty means valid.
std::vector<std::string> validate(const SystemParams& params);

/// Throws InvalidParameter carrying all messages from validate().
void require_valid(const SystemParams& params);

NoiseMoments noise_moments(const SystemParams& params);

DriftMatrix build_drift(const SystemParams& params);

DiffusionMatrix build_diffusion(const SystemParams& params, const NoiseMoments& moments);

/// Exchanges the roles of subsystems 1 and 2.
SystemParams swapped_subsystems(const SystemParams& params);

}  // namespace magsteer
