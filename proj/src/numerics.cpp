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

#include "magsteer/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace magsteer {

namespace {

constexpr int kMaxIterationsPerEigenvalue = 60;

// Row-major n x n view over a scratch buffer.
class Square {
 public:
  Square(std::vector<double>& buf, std::size_t n) : buf_(buf), n_(n) {}
  double& operator()(std::size_t i, std::size_t j) { return buf_[i * n_ + j]; }
  std::size_t n() const { return n_; }

 private:
  std::vector<double>& buf_;
  std::size_t n_;
};

// Reduction to upper Hessenberg form by elimination with row/column
// interchanges; entries below the subdiagonal are cleared on return.
void reduce_hessenberg(Square a) {
  const std::size_t n = a.n();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    double pivot = 0.0;
    std::size_t row = m;
    for (std::size_t j = m; j < n; ++j)
      if (std::abs(a(j, m - 1)) > std::abs(pivot)) {
        pivot = a(j, m - 1);
        row = j;
      }
    if (row != m) {
      for (std::size_t j = m - 1; j < n; ++j) std::swap(a(row, j), a(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(a(j, row), a(j, m));
    }
    if (pivot == 0.0) continue;
    for (std::size_t i = m + 1; i < n; ++i) {
      double y = a(i, m - 1);
      if (y == 0.0) continue;
      y /= pivot;
      a(i, m - 1) = y;
      for (std::size_t j = m; j < n; ++j) a(i, j) -= y * a(m, j);
      for (std::size_t j = 0; j < n; ++j) a(j, m) += y * a(j, i);
    }
  }
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) a(i, j) = 0.0;
}

double sign_of(double magnitude, double s) { return s >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude); }

// Francis double-shift QR on an upper Hessenberg matrix (eigenvalues only).
std::vector<std::complex<double>> hessenberg_qr(Square a) {
  const int n = static_cast<int>(a.n());
  std::vector<std::complex<double>> w(a.n());
  const double eps = std::numeric_limits<double>::epsilon();

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

  int nn = n - 1;
  double t = 0.0;  // accumulated exceptional shifts
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      // Look for a single small subdiagonal element.
      for (l = nn; l > 0; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        w[nn--] = x + t;
        continue;
      }
      double y = a(nn - 1, nn - 1);
      double ww = a(nn, nn - 1) * a(nn - 1, nn);
      if (l == nn - 1) {
        // Trailing 2x2 block.
        const double p = 0.5 * (y - x);
        const double q = p * p + ww;
        double z = std::sqrt(std::abs(q));
        x += t;
        if (q >= 0.0) {
          z = p + sign_of(z, p);
          w[nn - 1] = w[nn] = x + z;
          if (z != 0.0) w[nn] = x - ww / z;
        } else {
          w[nn] = {x + p, -z};
          w[nn - 1] = std::conj(w[nn]);
        }
        nn -= 2;
        continue;
      }

      if (its == kMaxIterationsPerEigenvalue)
        throw NumericalFailure("eigenvalues: QR iteration did not converge");
      if (its > 0 && its % 10 == 0) {
        // Exceptional shift.
        t += x;
        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
        y = x = 0.75 * s;
        ww = -0.4375 * s * s;
      }
      ++its;

      // Find two consecutive small subdiagonal elements.
      int m = nn - 2;
      double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
      for (; m >= l; --m) {
        z = a(m, m);
        r = x - z;
        double s = y - z;
        p = (r * s - ww) / a(m + 1, m) + a(m, m + 1);
        q = a(m + 1, m + 1) - z - r - s;
        r = a(m + 2, m + 1);
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
        const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
        if (u <= eps * v) break;
      }
      for (int i = m; i < nn - 1; ++i) {
        a(i + 2, i) = 0.0;
        if (i != m) a(i + 2, i - 1) = 0.0;
      }

      // Double QR step on rows l..nn and columns m..nn.
      for (int k = m; k < nn; ++k) {
        if (k != m) {
          p = a(k, k - 1);
          q = a(k + 1, k - 1);
          r = (k + 1 != nn) ? a(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
        if (s == 0.0) continue;
        if (k == m) {
          if (l != m) a(k, k - 1) = -a(k, k - 1);
        } else {
          a(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {
          p = a(k, j) + q * a(k + 1, j);
          if (k + 1 != nn) {
            p += r * a(k + 2, j);
            a(k + 2, j) -= p * z;
          }
          a(k + 1, j) -= p * y;
          a(k, j) -= p * x;
        }
        const int mmin = std::min(nn, k + 3);
        for (int i = l; i <= mmin; ++i) {
          p = x * a(i, k) + y * a(i, k + 1);
          if (k + 1 != nn) {
            p += z * a(i, k + 2);
            a(i, k + 2) -= p * r;
          }
          a(i, k + 1) -= p * q;
          a(i, k) -= p;
        }
      }
    } while (l + 1 < nn);
  }
  return w;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(std::span<const double> a, std::size_t n) {
  if (a.size() != n * n) throw InvalidParameter("eigenvalues: buffer size does not match n*n");
  for (double v : a)
    if (!std::isfinite(v)) throw InvalidParameter("eigenvalues: non-finite matrix entry");
  if (n == 0) return {};
  std::vector<double> work(a.begin(), a.end());
  Square h(work, n);
  reduce_hessenberg(h);
  return hessenberg_qr(h);
}

StabilityReport stability_of(std::span<const double> a, std::size_t n) {
  StabilityReport report;
  for (const auto& z : eigenvalues(a, n)) report.eigenvalue_real_parts.push_back(z.real());
  report.max_real_part = -std::numeric_limits<double>::infinity();
  for (double re : report.eigenvalue_real_parts) report.max_real_part = std::max(report.max_real_part, re);
  report.stable = report.max_real_part < 0.0;
  report.marginal = report.stable && report.max_real_part >= -1e-9;
  return report;
}

void solve_lyapunov_dense(std::span<const double> a, std::span<const double> d, std::size_t n,
                          std::span<double> x) {
  if (a.size() != n * n || d.size() != n * n || x.size() != n * n)
    throw InvalidParameter("solve_lyapunov: dimension mismatch");

  // Row-major vec: (A X + X A^T)_{ij} = sum_k A_ik X_kj + sum_l A_jl X_il.
  const std::size_t m = n * n;
  std::vector<double> k(m * m, 0.0);
  std::vector<double> rhs(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t s = 0; s < n; ++s) {
        k[row * m + s * n + j] += a[i * n + s];
        k[row * m + i * n + s] += a[j * n + s];
      }
      rhs[row] = -d[i * n + j];
    }

  double scale = 0.0;
  for (double v : k) scale = std::max(scale, std::abs(v));
  const double tiny = scale * static_cast<double>(m) * std::numeric_limits<double>::epsilon();

  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < m; ++i)
      if (std::abs(k[i * m + c]) > std::abs(k[piv * m + c])) piv = i;
    if (!(std::abs(k[piv * m + c]) > tiny))
      throw NumericalFailure("solve_lyapunov: singular Kronecker system");
    if (piv != c) {
      std::swap_ranges(k.begin() + c * m, k.begin() + (c + 1) * m, k.begin() + piv * m);
      std::swap(rhs[c], rhs[piv]);
    }
    const double inv = 1.0 / k[c * m + c];
    for (std::size_t i = c + 1; i < m; ++i) {
      const double f = k[i * m + c] * inv;
      if (f == 0.0) continue;
      for (std::size_t j = c + 1; j < m; ++j) k[i * m + j] -= f * k[c * m + j];
      rhs[i] -= f * rhs[c];
    }
  }
  for (std::size_t c = m; c-- > 0;) {
    double acc = rhs[c];
    for (std::size_t j = c + 1; j < m; ++j) acc -= k[c * m + j] * x[j];
    x[c] = acc / k[c * m + c];
  }
}

Mat8 relax_to_steady_state(const Mat8& a, const Mat8& d, double tol, double max_time) {
  if (!stability_of(a).stable)
    throw StabilityPrecondition("relax_to_steady_state: drift matrix is not stable");

  // Keep dt * (spectral radius of the Lyapunov operator) <= 1, inside the RK4
  // stability region.
  double row_norm = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < 8; ++j) s += std::abs(a(i, j));
    row_norm = std::max(row_norm, s);
  }
  const double dt = 0.5 / row_norm;
  const double target = tol * max_abs(d);

  auto rate = [&](const Mat8& s) { return lyapunov_operator(a, s, d); };
  Mat8 sigma = 0.5 * Mat8::identity();
  for (double time = 0.0;; time += dt) {
    const Mat8 k1 = rate(sigma);
    if (max_abs(k1) < target) return symmetrized(sigma);
    if (time > max_time)
      throw NumericalFailure("relax_to_steady_state: no convergence within max_time = " +
                             std::to_string(max_time));
    const Mat8 k2 = rate(sigma + (0.5 * dt) * k1);
    const Mat8 k3 = rate(sigma + (0.5 * dt) * k2);
    const Mat8 k4 = rate(sigma + dt * k3);
    sigma = sigma + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

}  // namespace magsteer
