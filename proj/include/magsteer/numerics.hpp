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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "magsteer/error.hpp"
#include "magsteer/matrix.hpp"
#include "magsteer/model.hpp"

namespace magsteer {

struct StabilityReport {
  bool stable = false;
  double max_real_part = 0.0;  // rad/s
  std::vector<double> eigenvalue_real_parts;
  // Stable, but with max real part in [-1e-9, 0).
  bool marginal = false;
};

/// Steady-state covariance over the DriftMatrix quadrature ordering.
struct CovarianceMatrix {
  Mat8 sigma;
};

/// Eigenvalues of a general real n x n row-major matrix, by reduction to upper
/// Hessenberg form (stabilized elimination) followed by Francis double-shift QR.
/// Throws NumericalFailure if an eigenvalue fails to converge.
std::vector<std::complex<double>> eigenvalues(std::span<const double> a, std::size_t n);

template <std::size_t N>
std::vector<std::complex<double>> eigenvalues(const Matrix<N, N>& a) {
  return eigenvalues(a.flat(), N);
}

template <std::size_t N>
std::vector<double> eigen_real_parts(const Matrix<N, N>& a) {
  std::vector<double> out;
  out.reserve(N);
  for (const auto& z : eigenvalues(a)) out.push_back(z.real());
  return out;
}

StabilityReport stability_of(std::span<const double> a, std::size_t n);

template <std::size_t N>
StabilityReport stability_of(const Matrix<N, N>& a) {
  return stability_of(a.flat(), N);
}

inline StabilityReport is_stable(const DriftMatrix& drift) { return stability_of(drift.a); }

/// Solves A X + X A^T + D = 0 for X through the n^2 x n^2 Kronecker system,
/// using Gaussian elimination with partial pivoting. No symmetrization and no
/// stability check. Throws NumericalFailure on a singular system.
void solve_lyapunov_dense(std::span<const double> a, std::span<const double> d, std::size_t n,
                          std::span<double> x);

template <std::size_t N>
Matrix<N, N> solve_lyapunov_raw(const Matrix<N, N>& a, const Matrix<N, N>& d) {
  Matrix<N, N> x;
  solve_lyapunov_dense(a.flat(), d.flat(), N, x.flat());
  return x;
}

/// Requires a stable drift (StabilityPrecondition otherwise); the returned
/// solution is symmetrized.
template <std::size_t N>
Matrix<N, N> solve_lyapunov(const Matrix<N, N>& a, const Matrix<N, N>& d) {
  const auto report = stability_of(a);
  if (!report.stable) throw StabilityPrecondition("solve_lyapunov: drift matrix is not stable");
  return symmetrized(solve_lyapunov_raw(a, d));
}

inline CovarianceMatrix solve_lyapunov(const DriftMatrix& drift, const DiffusionMatrix& diffusion) {
  return CovarianceMatrix{solve_lyapunov(drift.a, diffusion.d)};
}

template <std::size_t N>
Matrix<N, N> lyapunov_operator(const Matrix<N, N>& a, const Matrix<N, N>& sigma,
                               const Matrix<N, N>& d) {
  return a * sigma + sigma * transpose(a) + d;
}

/// max|A S + S A^T + D| / max|D|.
template <std::size_t N>
double lyapunov_residual(const Matrix<N, N>& a, const Matrix<N, N>& d, const Matrix<N, N>& sigma) {
  const double scale = max_abs(d);
  const double r = max_abs(lyapunov_operator(a, sigma, d));
  return scale > 0.0 ? r / scale : r;
}

/// Integrates dS/dt = A S + S A^T + D with classical RK4 from S(0) = I/2 until
/// max|dS/dt| < tol * max|D|. Test oracle for solve_lyapunov. Throws
/// StabilityPrecondition on an unstable drift and NumericalFailure when
/// max_time (seconds of model time) elapses first.
Mat8 relax_to_steady_state(const Mat8& a, const Mat8& d, double tol, double max_time);

inline CovarianceMatrix relax_to_steady_state(const DriftMatrix& drift,
                                              const DiffusionMatrix& diffusion, double tol,
                                              double max_time) {
  return CovarianceMatrix{relax_to_steady_state(drift.a, diffusion.d, tol, max_time)};
}

}  // namespace magsteer
