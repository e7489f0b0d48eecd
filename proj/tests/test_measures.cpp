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

#include "magsteer/measures.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "magsteer/sweep.hpp"
#include "test_support.hpp"

namespace magsteer {
namespace {

// Local symplectic rotation (q, p) -> (p, -q) on one mode of a two-mode CM.
TwoModeCM rotate_mode(const TwoModeCM& cm, int mode) {
  Mat2 rot;
  rot(0, 1) = 1.0;
  rot(1, 0) = -1.0;
  TwoModeCM out = cm;
  if (mode == 0) {
    out.x = rot * cm.x * transpose(rot);
    out.z = rot * cm.z;
  } else {
    out.y = rot * cm.y * transpose(rot);
    out.z = cm.z * transpose(rot);
  }
  return out;
}

TEST(ReduceMm, VacuumBlocks) {
  const TwoModeCM cm = reduce_mm(CovarianceMatrix{0.5 * Mat8::identity()});
  EXPECT_EQ(cm.x, 0.5 * Mat2::identity());
  EXPECT_EQ(cm.y, 0.5 * Mat2::identity());
  EXPECT_EQ(cm.z, Mat2{});
}

TEST(ReduceMm, SentinelBookkeeping) {
  Mat8 s = 0.5 * Mat8::identity();
  // 1-based (5,7) and (6,8).
  s(4, 6) = s(6, 4) = 111.0;
  s(5, 7) = s(7, 5) = 222.0;
  s(4, 5) = s(5, 4) = 7.0;
  s(6, 7) = s(7, 6) = 9.0;
  s(0, 4) = s(4, 0) = -1.0;  // cavity-magnon entry must not leak in
  const TwoModeCM cm = reduce_mm(CovarianceMatrix{s});
  EXPECT_EQ(cm.z(0, 0), 111.0);
  EXPECT_EQ(cm.z(1, 1), 222.0);
  EXPECT_EQ(cm.z(0, 1), 0.0);
  EXPECT_EQ(cm.x(0, 1), 7.0);
  EXPECT_EQ(cm.y(1, 0), 9.0);
}

TEST(SymplecticEigenvalues, Vacuum) {
  const auto [lo, hi] = symplectic_eigenvalues(TwoModeCM::from_matrix(0.5 * Mat4::identity()));
  EXPECT_NEAR(lo, 0.5, 1e-15);
  EXPECT_NEAR(hi, 0.5, 1e-15);
}

TEST(SymplecticEigenvalues, ProductState) {
  const TwoModeCM cm = TwoModeCM::from_matrix(Mat4::diagonal({1.5, 1.5, 0.7, 0.7}));
  const auto [lo, hi] = symplectic_eigenvalues(cm);
  EXPECT_NEAR(lo, 0.7, 1e-14);
  EXPECT_NEAR(hi, 1.5, 1e-14);
}

TEST(SymplecticEigenvalues, SqueezedVacuumIsPure) {
  for (double r : {0.5, 1.0, 1.5}) {
    const auto [lo, hi] = symplectic_eigenvalues(two_mode_squeezed_vacuum(r));
    EXPECT_NEAR(lo, 0.5, 1e-12) << r;
    EXPECT_NEAR(hi, 0.5, 1e-12) << r;
  }
}

TEST(LogNegativity, VacuumIsZero) {
  EXPECT_EQ(log_negativity(TwoModeCM::from_matrix(0.5 * Mat4::identity())), 0.0);
}

TEST(LogNegativity, SqueezedVacuumGivesTwoR) {
  for (double r : {0.25, 1.0, 2.0}) {
    const TwoModeCM cm = two_mode_squeezed_vacuum(r);
    EXPECT_NEAR(log_negativity(cm), 2.0 * r, 1e-12) << r;
    EXPECT_NEAR(psi_minus(cm), 0.5 * std::exp(-2.0 * r), 1e-12 * std::exp(-2.0 * r)) << r;
  }
}

TEST(LogNegativity, RejectsSubVacuumState) {
  EXPECT_THROW(log_negativity(TwoModeCM::from_matrix(0.25 * Mat4::identity())), InvalidState);
}

TEST(Steering, VacuumIsZero) {
  const auto s = steering(TwoModeCM::from_matrix(0.5 * Mat4::identity()));
  EXPECT_EQ(s.s_ab, 0.0);
  EXPECT_EQ(s.s_ba, 0.0);
}

TEST(Steering, SqueezedVacuumGivesLogCosh) {
  for (double r : {0.5, 1.0}) {
    const auto s = steering(two_mode_squeezed_vacuum(r));
    EXPECT_NEAR(s.s_ab, std::log(std::cosh(2.0 * r)), 1e-12);
    EXPECT_NEAR(s.s_ba, std::log(std::cosh(2.0 * r)), 1e-12);
  }
}

TEST(Steering, DirectionsDifferForAsymmetricState) {
  // Thermal noise added to mode B only.
  TwoModeCM cm = two_mode_squeezed_vacuum(1.0);
  cm.y = cm.y + 0.3 * Mat2::identity();
  const auto s = steering(cm);
  EXPECT_GT(s.s_ba, s.s_ab);
}

TEST(Steering, RejectsNonPositiveDeterminant) {
  EXPECT_THROW(steering(TwoModeCM::from_matrix(Mat4::diagonal({0.5, 0.5, 0.5, 0.0}))), InvalidState);
}

TEST(Steering, InvariantUnderLocalRotation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    CovarianceMatrix sigma;
    const auto rep = analyze(testing::random_params(rng), sigma);
    if (!rep.stable) continue;
    const TwoModeCM cm = reduce_mm(sigma);
    const auto s = steering(cm);
    for (int mode : {0, 1}) {
      const auto t = steering(rotate_mode(cm, mode));
      EXPECT_NEAR(t.s_ab, s.s_ab, 1e-12);
      EXPECT_NEAR(t.s_ba, s.s_ba, 1e-12);
    }
  }
}

TEST(Physicality, VacuumOk) {
  EXPECT_TRUE(physicality_check(CovarianceMatrix{0.5 * Mat8::identity()}).ok);
  EXPECT_TRUE(physicality_check(TwoModeCM::from_matrix(0.5 * Mat4::identity())).ok);
}

TEST(Physicality, BelowVacuumViolates) {
  const auto full = physicality_check(CovarianceMatrix{0.25 * Mat8::identity()});
  EXPECT_FALSE(full.ok);
  ASSERT_EQ(full.symplectic_eigenvalues.size(), 4u);
  EXPECT_NEAR(full.symplectic_eigenvalues[0], 0.25, 1e-12);
  EXPECT_FALSE(physicality_check(TwoModeCM::from_matrix(0.25 * Mat4::identity())).ok);
}

TEST(Physicality, IndefiniteMatrixViolates) {
  EXPECT_FALSE(physicality_check(CovarianceMatrix{Mat8::diagonal({1, 1, 1, 1, 1, 1, 1, -1})}).ok);
}

TEST(Physicality, FullAndReducedChecksAgreeOnSteadyStates) {
  std::mt19937_64 rng(42);
  int checked = 0;
  while (checked < 30) {
    CovarianceMatrix sigma;
    const auto rep = analyze(testing::random_params(rng), sigma);
    if (!rep.stable) continue;
    ++checked;
    const auto full = physicality_check(sigma);
    EXPECT_TRUE(full.ok) << full.message;
    const auto reduced = physicality_check(reduce_mm(sigma));
    EXPECT_TRUE(reduced.ok);
    // Reduced states of a physical state are at least as mixed.
    EXPECT_GE(reduced.symplectic_eigenvalues[0], full.symplectic_eigenvalues[0] - 1e-9);
  }
}

TEST(Analyze, BaselineEntangled) {
  const auto rep = analyze(baseline_params());
  EXPECT_TRUE(rep.stable);
  EXPECT_GT(rep.e_m, 0.0);
  EXPECT_LT(rep.psi_minus, 0.5);
  EXPECT_NEAR(rep.s_ab, rep.s_ba, 1e-10);
  EXPECT_LT(rep.margin, 0.0);
}

TEST(Analyze, NoSqueezingIsSeparable) {
  SystemParams p = baseline_params();
  p.r = 0.0;
  const auto rep = analyze(p);
  EXPECT_LE(rep.e_m, 1e-10);
  EXPECT_LE(rep.s_ab, 1e-10);
  EXPECT_LE(rep.s_ba, 1e-10);
}

TEST(Analyze, OpaThresholdUnstableGivesNaN) {
  SystemParams p = baseline_params();
  p.theta = 0.0;
  p.g = {0.0, 0.0};
  p.lambda_opa = {0.6 * p.kappa_c[0], 0.6 * p.kappa_c[1]};
  const auto rep = analyze(p);
  EXPECT_FALSE(rep.stable);
  EXPECT_TRUE(std::isnan(rep.e_m));
  EXPECT_TRUE(std::isnan(rep.s_ab));
  EXPECT_TRUE(std::isnan(rep.s_ba));
  EXPECT_TRUE(std::isnan(rep.psi_minus));
  EXPECT_GT(rep.margin, 0.0);
}

TEST(Analyze, RejectsInvalidParameters) {
  SystemParams p = baseline_params();
  p.kappa_m[1] = 0.0;
  EXPECT_THROW(analyze(p), InvalidParameter);
}

TEST(AnalyzeProperties, ModeSwapSymmetry) {
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 40) {
    const SystemParams p = testing::random_params(rng);
    const auto a = analyze(p);
    if (!a.stable) continue;
    ++checked;
    const auto b = analyze(swapped_subsystems(p));
    EXPECT_NEAR(a.e_m, b.e_m, 1e-10);
    EXPECT_NEAR(a.s_ab, b.s_ba, 1e-10);
    EXPECT_NEAR(a.s_ba, b.s_ab, 1e-10);
  }
}

TEST(AnalyzeProperties, SteeringImpliesEntanglementAndBoundaryConsistency) {
  std::mt19937_64 rng(44);
  int checked = 0;
  while (checked < 200) {
    const auto rep = analyze(testing::random_params(rng));
    if (!rep.stable) continue;
    ++checked;
    if (rep.s_ab > 1e-9 || rep.s_ba > 1e-9) EXPECT_GT(rep.e_m, 1e-12);
    EXPECT_EQ(rep.e_m > 0.0, rep.psi_minus < 0.5);
  }
}

TEST(AnalyzeProperties, SeparableWithoutInputSqueezing) {
  std::mt19937_64 rng(45);
  int checked = 0;
  while (checked < 60) {
    SystemParams p = testing::random_params(rng);
    p.r = 0.0;
    const auto rep = analyze(p);
    if (!rep.stable) continue;
    ++checked;
    EXPECT_LE(rep.e_m, 1e-10);
    EXPECT_LE(rep.s_ab, 1e-10);
    EXPECT_LE(rep.s_ba, 1e-10);
  }
}

}  // namespace
}  // namespace magsteer
