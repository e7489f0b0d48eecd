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

#include <string>
#include <utility>
#include <vector>

#include "magsteer/matrix.hpp"
#include "magsteer/model.hpp"
#include "magsteer/numerics.hpp"

namespace magsteer {

/// Two-mode reduced covariance matrix [[X, Z], [Z^T, Y]].
struct TwoModeCM {
  Mat2 x;  // mode A autocorrelation
  Mat2 y;  // mode B autocorrelation
  Mat2 z;  // A-B cross-correlation

  Mat4 assembled() const;
  static TwoModeCM from_matrix(const Mat4& m);
};

/// Measures for a single parameter point. When `stable` is false the measure
/// fields are NaN.
struct CorrelationReport {
  double e_m = 0.0;
  double s_ab = 0.0;
  double s_ba = 0.0;
  double psi_minus = 0.0;
  bool stable = false;
  double margin = 0.0;  // largest drift eigenvalue real part (rad/s)
  bool marginal = false;
};

/// Magnon-magnon block: rows/cols {q1, p1} and {q2, p2}.
TwoModeCM reduce_mm(const CovarianceMatrix& sigma);

/// Two-mode squeezed vacuum with squeezing r: X = Y = cosh(2r)/2 I and
/// Z = sinh(2r)/2 diag(1, -1).
TwoModeCM two_mode_squeezed_vacuum(double r);

/// (nu_minus, nu_plus) from the invariants det X, det Y, det Z, det sigma.
std::pair<double, double> symplectic_eigenvalues(const TwoModeCM& cm);

/// Smallest symplectic eigenvalue of the partial transpose.
double psi_minus(const TwoModeCM& cm);

/// E = max(0, -ln(2 psi_minus)). Throws InvalidState on nonphysical input.
double log_negativity(const TwoModeCM& cm);

struct Steering {
  double s_ab = 0.0;
  double s_ba = 0.0;
};

/// Gaussian steering in both directions from det X, det Y and det sigma.
Steering steering(const TwoModeCM& cm);

struct PhysicalityReport {
  bool ok = true;
  std::vector<double> symplectic_eigenvalues;
  std::string message;
};

inline constexpr double kPhysicalityTolerance = 1e-9;

PhysicalityReport physicality_check(const TwoModeCM& cm);

/// Full 8x8 check through the spectrum of Omega * Sigma, whose eigenvalues are
/// +-i times the symplectic eigenvalues.
PhysicalityReport physicality_check(const CovarianceMatrix& sigma);

/// build_drift -> is_stable -> build_diffusion -> solve_lyapunov -> reduce_mm ->
/// measures. Unstable points return stable = false with NaN measures.
CorrelationReport analyze(const SystemParams& params);

/// Same as analyze but also hands back the full covariance (zeroed when
/// unstable).
CorrelationReport analyze(const SystemParams& params, CovarianceMatrix& sigma_out);

}  // namespace magsteer
