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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>

namespace magsteer {

/// Dense row-major matrix with compile-time shape. Value type; zero
/// initialized.
template <std::size_t Rows, std::size_t Cols>
struct Matrix {
  static constexpr std::size_t rows = Rows;
  static constexpr std::size_t cols = Cols;

  std::array<double, Rows * Cols> data{};

  constexpr double& operator()(std::size_t i, std::size_t j) { return data[i * Cols + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return data[i * Cols + j]; }

  static constexpr Matrix zero() { return Matrix{}; }

  static constexpr Matrix identity()
    requires(Rows == Cols)
  {
    Matrix m;
    for (std::size_t i = 0; i < Rows; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr Matrix diagonal(const std::array<double, Rows>& d)
    requires(Rows == Cols)
  {
    Matrix m;
    for (std::size_t i = 0; i < Rows; ++i) m(i, i) = d[i];
    return m;
  }

  std::span<double> flat() { return data; }
  std::span<const double> flat() const { return data; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

using Mat2 = Matrix<2, 2>;
using Mat4 = Matrix<4, 4>;
using Mat8 = Matrix<8, 8>;

template <std::size_t R, std::size_t C>
constexpr Matrix<R, C> operator+(const Matrix<R, C>& a, const Matrix<R, C>& b) {
  Matrix<R, C> out;
  for (std::size_t k = 0; k < R * C; ++k) out.data[k] = a.data[k] + b.data[k];
  return out;
}

template <std::size_t R, std::size_t C>
constexpr Matrix<R, C> operator-(const Matrix<R, C>& a, const Matrix<R, C>& b) {
  Matrix<R, C> out;
  for (std::size_t k = 0; k < R * C; ++k) out.data[k] = a.data[k] - b.data[k];
  return out;
}

template <std::size_t R, std::size_t C>
constexpr Matrix<R, C> operator*(double s, const Matrix<R, C>& a) {
  Matrix<R, C> out;
  for (std::size_t k = 0; k < R * C; ++k) out.data[k] = s * a.data[k];
  return out;
}

template <std::size_t R, std::size_t K, std::size_t C>
constexpr Matrix<R, C> operator*(const Matrix<R, K>& a, const Matrix<K, C>& b) {
  Matrix<R, C> out;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t k = 0; k < K; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < C; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <std::size_t R, std::size_t C>
constexpr Matrix<C, R> transpose(const Matrix<R, C>& a) {
  Matrix<C, R> out;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out(j, i) = a(i, j);
  return out;
}

template <std::size_t N>
constexpr Matrix<N, N> symmetrized(const Matrix<N, N>& a) {
  Matrix<N, N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = 0.5 * (a(i, j) + a(j, i));
  return out;
}

template <std::size_t R, std::size_t C>
double max_abs(const Matrix<R, C>& a) {
  double m = 0.0;
  for (double v : a.data) m = std::max(m, std::abs(v));
  return m;
}

// Largest |a(i,j) - a(j,i)|.
template <std::size_t N>
double asymmetry(const Matrix<N, N>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) m = std::max(m, std::abs(a(i, j) - a(j, i)));
  return m;
}

/// Square sub-block of size M starting at (row, col).
template <std::size_t M, std::size_t N>
constexpr Matrix<M, M> block(const Matrix<N, N>& a, std::size_t row, std::size_t col) {
  Matrix<M, M> out;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) out(i, j) = a(row + i, col + j);
  return out;
}

template <std::size_t M, std::size_t N>
constexpr void set_block(Matrix<N, N>& a, std::size_t row, std::size_t col, const Matrix<M, M>& b) {
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) a(row + i, col + j) = b(i, j);
}

constexpr double det2(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

/// Determinant by Gaussian elimination with partial pivoting. Returns 0 for an
/// exactly singular matrix.
template <std::size_t N>
double determinant(Matrix<N, N> a) {
  double det = 1.0;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < N; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (a(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < N; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < N; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < N; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace magsteer
