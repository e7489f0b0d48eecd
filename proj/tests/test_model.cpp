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
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "magsteer/error.hpp"
#include "magsteer/sweep.hpp"
#include "test_support.hpp"

namespace magsteer {
namespace {

constexpr double kPi = std::numbers::pi;

bool contains(const std::vector<std::string>& errors, const std::string& text) {
  for (const auto& e : errors)
    if (e.find(text) != std::string::npos) return true;
  return false;
}

// Literal transcription of the drift matrix, 1-based (row, col) as printed.
Mat8 literal_drift(const SystemParams& p) {
  Mat8 a;
  auto set = [&](int i, int j, double v) { a(i - 1, j - 1) = v; };
  const double l1 = p.lambda_opa[0], l2 = p.lambda_opa[1], m1 = p.mu_sq[0], m2 = p.mu_sq[1];
  const double ct = std::cos(p.theta), st = std::sin(p.theta), cn = std::cos(p.nu), sn = std::sin(p.nu);
  // A1
  set(1, 1, -p.kappa_c[0] + 2 * l1 * ct);
  set(1, 2, p.delta_c[0] + 2 * l1 * st);
  set(2, 1, -p.delta_c[0] + 2 * l1 * st);
  set(2, 2, -p.kappa_c[0] - 2 * l1 * ct);
  set(3, 3, -p.kappa_c[1] + 2 * l2 * ct);
  set(3, 4, p.delta_c[1] + 2 * l2 * st);
  set(4, 3, -p.delta_c[1] + 2 * l2 * st);
  set(4, 4, -p.kappa_c[1] - 2 * l2 * ct);
  // A2
  set(5, 5, -p.kappa_m[0] + 2 * m1 * cn);
  set(5, 6, p.delta_m[0] + 2 * m1 * sn);
  set(6, 5, -p.delta_m[0] + 2 * m1 * sn);
  set(6, 6, -p.kappa_m[0] - 2 * m1 * cn);
  set(7, 7, -p.kappa_m[1] + 2 * m2 * cn);
  set(7, 8, p.delta_m[1] + 2 * m2 * sn);
  set(8, 7, -p.delta_m[1] + 2 * m2 * sn);
  set(8, 8, -p.kappa_m[1] - 2 * m2 * cn);
  // A3 in both off-diagonal positions
  for (int off : {0, 4}) {
    const int r0 = off, c0 = 4 - off;
    set(r0 + 1, c0 + 2, p.g[0]);
    set(r0 + 2, c0 + 1, -p.g[0]);
    set(r0 + 3, c0 + 4, p.g[1]);
    set(r0 + 4, c0 + 3, -p.g[1]);
  }
  return a;
}

TEST(ThermalOccupation, TenGigahertzAtHundredMillikelvin) {
  const double n = thermal_occupation(kTwoPi * 10e9, 0.1);
  // 1 / (exp(4.7993) - 1)
  EXPECT_NEAR(n, 8.3044e-3, 1e-6);
}

TEST(ThermalOccupation, ZeroTemperatureIsExactlyZero) {
  EXPECT_EQ(thermal_occupation(1.0, 0.0), 0.0);
  EXPECT_EQ(thermal_occupation(kTwoPi * 10e9, 0.0), 0.0);
}

TEST(ThermalOccupation, HighTemperatureApproachesClassicalLimit) {
  const double w = kTwoPi * 10e9;
  for (double t : {10.0, 100.0}) {
    const double classical = kBoltzmann * t / (kHbar * w);
    const double n = thermal_occupation(w, t);
    EXPECT_NEAR(n / (classical - 0.5), 1.0, 1e-3) << "T = " << t;
  }
  const double gap10 = 1.0 - thermal_occupation(w, 10.0) / (kBoltzmann * 10.0 / (kHbar * w));
  const double gap100 = 1.0 - thermal_occupation(w, 100.0) / (kBoltzmann * 100.0 / (kHbar * w));
  EXPECT_LT(gap10, 0.03);
  EXPECT_LT(gap100, 0.1 * gap10 * 1.01);
}

TEST(ThermalOccupation, RejectsNonPositiveFrequency) {
  EXPECT_THROW(thermal_occupation(0.0, 0.1), InvalidParameter);
  EXPECT_THROW(thermal_occupation(-1.0, 0.1), InvalidParameter);
}

TEST(NoiseMoments, NoSqueezing) {
  SystemParams p = baseline_params();
  p.r = 0.0;
  const auto m = noise_moments(p);
  EXPECT_EQ(m.n_sq, 0.0);
  EXPECT_EQ(m.m_sq, 0.0);
}

TEST(NoiseMoments, UnitSqueezing) {
  SystemParams p = baseline_params();
  p.r = 1.0;
  const auto m = noise_moments(p);
  EXPECT_NEAR(m.n_sq, 1.3810978455418155, 1e-14);
  EXPECT_NEAR(m.m_sq, 1.8134302039235093, 1e-14);
  EXPECT_NEAR(m.m_sq * m.m_sq - m.n_sq * (m.n_sq + 1.0), 0.0, 1e-12 * m.m_sq * m.m_sq);
}

TEST(NoiseMoments, IdealSqueezedVacuumIdentityHoldsOverRange) {
  SystemParams p = baseline_params();
  for (int k = 0; k <= 60; ++k) {
    p.r = 0.05 * k;
    const auto m = noise_moments(p);
    const double scale = std::max(1.0, m.m_sq * m.m_sq);
    EXPECT_LE(std::abs(m.m_sq * m.m_sq - m.n_sq * (m.n_sq + 1.0)), 1e-12 * scale) << "r = " << p.r;
  }
}

TEST(NoiseMoments, OverrideBypassesTemperature) {
  SystemParams p = baseline_params();
  p.n_m_override = Pair{0.7, 1.3};
  p.temperature = 5.0;
  const auto m = noise_moments(p);
  EXPECT_EQ(m.n_m[0], 0.7);
  EXPECT_EQ(m.n_m[1], 1.3);
}

TEST(Validate, BaselineIsValid) { EXPECT_TRUE(validate(baseline_params()).empty()); }

TEST(Validate, ZeroCavityDecayNamesField) {
  SystemParams p = baseline_params();
  p.kappa_c[0] = 0.0;
  const auto errors = validate(p);
  ASSERT_EQ(errors.size(), 1u);
  EXPECT_EQ(errors[0], "kappa_c[0] must be > 0");
}

TEST(Validate, NegativeTemperature) {
  SystemParams p = baseline_params();
  p.temperature = -1.0;
  EXPECT_TRUE(contains(validate(p), "temperature"));
  EXPECT_THROW(build_drift(p), InvalidParameter);
}

TEST(Validate, ReportsEveryViolation) {
  SystemParams p = baseline_params();
  p.kappa_m = {-1.0, 0.0};
  p.r = -0.1;
  p.g[1] = -2.0;
  p.omega_m_abs[0] = 0.0;
  const auto errors = validate(p);
  EXPECT_EQ(errors.size(), 5u);
  EXPECT_TRUE(contains(errors, "kappa_m[0]"));
  EXPECT_TRUE(contains(errors, "kappa_m[1]"));
  EXPECT_TRUE(contains(errors, "r must"));
  EXPECT_TRUE(contains(errors, "g[1]"));
  EXPECT_TRUE(contains(errors, "omega_m_abs[0]"));
}

TEST(Validate, OmegaIrrelevantWithOverride) {
  SystemParams p = baseline_params();
  p.omega_m_abs = {0.0, 0.0};
  EXPECT_FALSE(validate(p).empty());
  p.n_m_override = Pair{0.1, 0.1};
  EXPECT_TRUE(validate(p).empty());
}

TEST(BuildDrift, DecoupledDampedModes) {
  SystemParams p = baseline_params();
  p.g = {0.0, 0.0};
  p.lambda_opa = {0.0, 0.0};
  p.mu_sq = {0.0, 0.0};
  const auto a = build_drift(p).a;
  const Mat8 expect = Mat8::diagonal({-p.kappa_c[0], -p.kappa_c[0], -p.kappa_c[1], -p.kappa_c[1], -p.kappa_m[0],
                                      -p.kappa_m[0], -p.kappa_m[1], -p.kappa_m[1]});
  EXPECT_EQ(a, expect);
}

TEST(BuildDrift, OpaEntriesAtThetaPi) {
  SystemParams p = baseline_params();
  p.delta_c[0] = 0.37 * p.kappa_c[0];
  const auto a = build_drift(p).a;
  EXPECT_NEAR(a(0, 0), -1.4 * p.kappa_c[0], 1e-14 * p.kappa_c[0]);
  // 2 lambda sin(pi) is a few 1e-9 rad/s.
  EXPECT_NEAR(a(0, 1), p.delta_c[0], 1e-14 * p.kappa_c[0]);
}

TEST(BuildDrift, CouplingBlockPositions) {
  const SystemParams p = baseline_params();
  const auto a = build_drift(p).a;
  const double g1 = 5.0 * baseline_kappa_c();
  EXPECT_EQ(a(0, 5), g1);
  EXPECT_EQ(a(5, 0), -g1);
  EXPECT_EQ(a(1, 4), -g1);
  EXPECT_EQ(a(4, 1), g1);
  EXPECT_EQ(a(2, 7), p.g[1]);
  EXPECT_EQ(a(7, 2), -p.g[1]);
}

TEST(BuildDrift, MatchesLiteralTranscriptionForRandomParameters) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const SystemParams p = testing::random_params(rng);
    const Mat8 a = build_drift(p).a;
    const Mat8 ref = literal_drift(p);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) ASSERT_EQ(a(i, j), ref(i, j)) << "(" << i << "," << j << ")";
  }
}

TEST(BuildDrift, LinearInGainsCouplingsAndDetunings) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const SystemParams p = testing::random_params(rng);
    SystemParams q = testing::random_params(rng);
    q.kappa_c = p.kappa_c;
    q.kappa_m = p.kappa_m;
    q.theta = p.theta;
    q.nu = p.nu;
    SystemParams sum = p, zero = p;
    for (std::size_t j = 0; j < 2; ++j) {
      sum.delta_c[j] = p.delta_c[j] + q.delta_c[j];
      sum.delta_m[j] = p.delta_m[j] + q.delta_m[j];
      sum.g[j] = p.g[j] + q.g[j];
      sum.lambda_opa[j] = p.lambda_opa[j] + q.lambda_opa[j];
      sum.mu_sq[j] = p.mu_sq[j] + q.mu_sq[j];
    }
    zero.delta_c = zero.delta_m = zero.g = zero.lambda_opa = zero.mu_sq = {0.0, 0.0};
    const Mat8 lhs = build_drift(sum).a - build_drift(p).a - build_drift(q).a + build_drift(zero).a;
    EXPECT_LE(max_abs(lhs), 1e-14 * max_abs(build_drift(sum).a));
  }
}

TEST(BuildDiffusion, VacuumEqualsPureDamping) {
  SystemParams p = baseline_params();
  p.r = 0.0;
  p.temperature = 0.0;
  const auto d = build_diffusion(p, noise_moments(p)).d;
  const Mat8 expect = Mat8::diagonal({p.kappa_c[0], p.kappa_c[0], p.kappa_c[1], p.kappa_c[1], p.kappa_m[0],
                                      p.kappa_m[0], p.kappa_m[1], p.kappa_m[1]});
  EXPECT_EQ(d, expect);
}

TEST(BuildDiffusion, DerivedCrossTerms) {
  SystemParams p = baseline_params();
  p.kappa_c = {1.3e7, 2.9e7};
  const auto d = build_diffusion(p, noise_moments(p)).d;
  const double expect = 2.0 * std::sqrt(1.3e7 * 2.9e7) * 1.8134302039235093;
  EXPECT_NEAR(d(0, 2), expect, 1e-12 * expect);
  EXPECT_EQ(d(2, 0), d(0, 2));
  EXPECT_EQ(d(1, 3), -d(0, 2));
  EXPECT_EQ(d(3, 1), -d(0, 2));
  EXPECT_NEAR(d(0, 0), 1.3e7 * (2.0 * 1.3810978455418155 + 1.0), 1e-3);
}

TEST(BuildDiffusion, PrintedConvention) {
  SystemParams p = baseline_params();
  p.kappa_c = {1.3e7, 2.9e7};
  p.diffusion_convention = DiffusionConvention::paper;
  const auto m = noise_moments(p);
  const auto d = build_diffusion(p, m).d;
  const double expect = std::sqrt(1.3e7 * 2.9e7) * 1.8134302039235093;
  EXPECT_NEAR(d(0, 2), expect, 1e-12 * expect);
  EXPECT_NEAR(d(1, 1), 1.3e7 * (m.n_sq + 0.5), 1e-6);
  EXPECT_NEAR(d(4, 4), p.kappa_m[0] * (2.0 * m.n_m[0] + 1.0), 1e-6);
}

TEST(BuildDiffusion, SymmetricPositiveSemidefiniteAndBlockSeparated) {
  std::mt19937_64 rng(13);
  for (auto conv : {DiffusionConvention::derived, DiffusionConvention::paper}) {
    for (int trial = 0; trial < 100; ++trial) {
      SystemParams p = testing::random_params(rng);
      p.diffusion_convention = conv;
      const Mat8 d = build_diffusion(p, noise_moments(p)).d;
      ASSERT_EQ(asymmetry(d), 0.0);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 4; j < 8; ++j) {
          ASSERT_EQ(d(i, j), 0.0);
          ASSERT_EQ(d(j, i), 0.0);
        }
      Eigen::Matrix<double, 8, 8> e;
      double max_diag = 0.0;
      for (std::size_t i = 0; i < 8; ++i) {
        max_diag = std::max(max_diag, d(i, i));
        for (std::size_t j = 0; j < 8; ++j) e(i, j) = d(i, j);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> solver(e);
      EXPECT_GE(solver.eigenvalues().minCoeff(), -1e-10 * max_diag);
    }
  }
}

TEST(SwappedSubsystems, IsAnInvolution) {
  std::mt19937_64 rng(14);
  const SystemParams p = testing::random_params(rng);
  EXPECT_EQ(swapped_subsystems(swapped_subsystems(p)), p);
  EXPECT_EQ(swapped_subsystems(p).kappa_c[0], p.kappa_c[1]);
}

TEST(DiffusionConvention, StringRoundTrip) {
  for (auto c : {DiffusionConvention::derived, DiffusionConvention::paper})
    EXPECT_EQ(parse_convention(to_string(c)), c);
  EXPECT_FALSE(parse_convention("Derived").has_value());
}

}  // namespace
}  // namespace magsteer
