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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace magsteer {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDiscriminantTolerance = 1e-12;

struct Invariants {
  double det_x, det_y, det_z, det_sigma;
};

Invariants invariants(const TwoModeCM& cm) {
  return {det2(cm.x), det2(cm.y), det2(cm.z), determinant(cm.assembled())};
}

// Roots of t^2 - b t + c = 0 (squared symplectic eigenvalues), the smaller one
// evaluated without cancellation. |disc| <= 1e-12 b^2 is clamped to zero: a
// degenerate pair (pure states) otherwise picks up sqrt(rounding) splitting.
std::pair<double, double> invariant_roots(double b, double c) {
  double disc = b * b - 4.0 * c;
  if (disc < -kDiscriminantTolerance * b * b)
    throw NumericalFailure("symplectic eigenvalues: negative discriminant");
  if (std::abs(disc) <= kDiscriminantTolerance * b * b) disc = 0.0;
  const double root = std::sqrt(disc);
  const double big = 0.5 * (b + root);
  const double small = big > 0.0 ? c / big : 0.0;
  return {small, big};
}

double safe_sqrt(double v) { return std::sqrt(std::max(v, 0.0)); }

// Positive definiteness by attempting a Cholesky factorization.
template <std::size_t N>
bool positive_definite(const Matrix<N, N>& a) {
  Matrix<N, N> l;
  for (std::size_t j = 0; j < N; ++j) {
    double s = a(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
    if (!(s > 0.0)) return false;
    l(j, j) = std::sqrt(s);
    for (std::size_t i = j + 1; i < N; ++i) {
      double t = a(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
      l(i, j) = t / l(j, j);
    }
  }
  return true;
}

}  // namespace

Mat4 TwoModeCM::assembled() const {
  Mat4 m;
  set_block(m, 0, 0, x);
  set_block(m, 2, 2, y);
  set_block(m, 0, 2, z);
  set_block(m, 2, 0, transpose(z));
  return m;
}

TwoModeCM TwoModeCM::from_matrix(const Mat4& m) {
  return {block<2>(m, 0, 0), block<2>(m, 2, 2), block<2>(m, 0, 2)};
}

TwoModeCM reduce_mm(const CovarianceMatrix& cov) {
  using namespace index;
  const Mat8& s = cov.sigma;
  TwoModeCM cm;
  const std::size_t a[2] = {magnon_q(0), magnon_p(0)};
  const std::size_t b[2] = {magnon_q(1), magnon_p(1)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      cm.x(i, j) = s(a[i], a[j]);
      cm.y(i, j) = s(b[i], b[j]);
      cm.z(i, j) = s(a[i], b[j]);
    }
  return cm;
}

TwoModeCM two_mode_squeezed_vacuum(double r) {
  const double c = 0.5 * std::cosh(2.0 * r);
  const double s = 0.5 * std::sinh(2.0 * r);
  TwoModeCM cm;
  cm.x = Mat2::diagonal({c, c});
  cm.y = cm.x;
  cm.z = Mat2::diagonal({s, -s});
  return cm;
}

std::pair<double, double> symplectic_eigenvalues(const TwoModeCM& cm) {
  const auto inv = invariants(cm);
  const double delta = inv.det_x + inv.det_y + 2.0 * inv.det_z;
  const auto [lo, hi] = invariant_roots(delta, inv.det_sigma);
  return {safe_sqrt(lo), safe_sqrt(hi)};
}

double psi_minus(const TwoModeCM& cm) {
  const auto inv = invariants(cm);
  const double delta_pt = inv.det_x + inv.det_y - 2.0 * inv.det_z;
  return safe_sqrt(invariant_roots(delta_pt, inv.det_sigma).first);
}

double log_negativity(const TwoModeCM& cm) {
  const auto physical = physicality_check(cm);
  if (!physical.ok) throw InvalidState("log_negativity: " + physical.message);
  return std::max(0.0, -std::log(2.0 * psi_minus(cm)));
}

Steering steering(const TwoModeCM& cm) {
  const auto inv = invariants(cm);
  if (!(inv.det_sigma > 0.0)) throw InvalidState("steering: covariance determinant is not positive");
  const auto physical = physicality_check(cm);
  if (!physical.ok) throw InvalidState("steering: " + physical.message);
  Steering s;
  s.s_ab = std::max(0.0, 0.5 * std::log(inv.det_x / (4.0 * inv.det_sigma)));
  s.s_ba = std::max(0.0, 0.5 * std::log(inv.det_y / (4.0 * inv.det_sigma)));
  return s;
}

PhysicalityReport physicality_check(const TwoModeCM& cm) {
  PhysicalityReport report;
  const Mat4 m = cm.assembled();
  if (!positive_definite(m)) {
    report.ok = false;
    report.message = "covariance matrix is not positive definite";
    return report;
  }
  const auto [lo, hi] = symplectic_eigenvalues(cm);
  report.symplectic_eigenvalues = {lo, hi};
  if (lo < 0.5 - kPhysicalityTolerance) {
    report.ok = false;
    std::ostringstream os;
    os.precision(12);
    os << "symplectic eigenvalue " << lo << " below vacuum bound 1/2";
    report.message = os.str();
  }
  return report;
}

PhysicalityReport physicality_check(const CovarianceMatrix& cov) {
  PhysicalityReport report;
  if (!positive_definite(cov.sigma)) {
    report.ok = false;
    report.message = "covariance matrix is not positive definite";
    return report;
  }
  Mat8 omega;
  for (std::size_t k = 0; k < 4; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  const auto ev = eigenvalues(omega * cov.sigma);
  std::vector<double> nus;
  for (const auto& z : ev)
    if (z.imag() > 0.0) nus.push_back(z.imag());
  // Positive definite Sigma guarantees a purely imaginary +-i nu spectrum.
  if (nus.size() != 4) {
    report.ok = false;
    report.message = "Omega*Sigma spectrum is not purely imaginary";
    return report;
  }
  std::sort(nus.begin(), nus.end());
  report.symplectic_eigenvalues = nus;
  if (nus.front() < 0.5 - kPhysicalityTolerance) {
    report.ok = false;
    std::ostringstream os;
    os.precision(12);
    os << "symplectic eigenvalue " << nus.front() << " below vacuum bound 1/2";
    report.message = os.str();
  }
  return report;
}

CorrelationReport analyze(const SystemParams& params, CovarianceMatrix& sigma_out) {
  require_valid(params);
  const DriftMatrix drift = build_drift(params);
  const StabilityReport stability = is_stable(drift);

  CorrelationReport report;
  report.stable = stability.stable;
  report.margin = stability.max_real_part;
  report.marginal = stability.marginal;
  if (!stability.stable) {
    report.e_m = report.s_ab = report.s_ba = report.psi_minus = kNaN;
    sigma_out = CovarianceMatrix{};
    return report;
  }

  const DiffusionMatrix diffusion = build_diffusion(params, noise_moments(params));
  sigma_out = solve_lyapunov(drift, diffusion);
  const TwoModeCM cm = reduce_mm(sigma_out);
  report.e_m = log_negativity(cm);
  report.psi_minus = psi_minus(cm);
  const Steering s = steering(cm);
  report.s_ab = s.s_ab;
  report.s_ba = s.s_ba;
  return report;
}

CorrelationReport analyze(const SystemParams& params) {
  CovarianceMatrix unused;
  return analyze(params, unused);
}

}  // namespace magsteer
