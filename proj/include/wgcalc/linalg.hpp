// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wgcalc/error.hpp"
#include "wgcalc/rational.hpp"

namespace wgcalc {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

/// Complex conjugate; the identity on real and rational scalars.
template <class T>
T conj_value(const T& x) {
  if constexpr (is_complex<T>::value) {
    return std::conj(x);
  } else {
    return x;
  }
}

/// Converts an exact rational into the working scalar type.
template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return T(to_double(r));
  }
}

/// Small dense row-major matrix over an exact or floating scalar. Used for
/// the exact evaluation path (Σ, Σ^{-1}, B^{-1}); the Monte Carlo harness
/// works with Eigen types instead. Indices are zero-based here.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
      }
    }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj_value(( *this)(i, j));
    }
    return t;
  }

  T trace() const {
    require_square("trace");
    T t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_self_adjoint() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (!(( *this)(i, j) == conj_value((*this)(j, i)))) return false;
      }
    }
    return true;
  }

  /// Gauss-Jordan inverse. Exact for Rational (first nonzero pivot); partial
  /// pivoting for floating scalars. Throws DomainError when singular.
  Matrix inverse() const {
    require_square("inverse");
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = n;
      if constexpr (std::is_same_v<T, Rational>) {
        for (std::size_t r = col; r < n; ++r) {
          if (a(r, col) != 0) {
            pivot = r;
            break;
          }
        }
      } else {
        double best = 0.0;
        for (std::size_t r = col; r < n; ++r) {
          const double mag = std::abs(a(r, col));
          if (mag > best) {
            best = mag;
            pivot = r;
          }
        }
        if (best == 0.0) pivot = n;
      }
      if (pivot == n) throw DomainError("matrix is singular");
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(pivot, j), a(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      }
      const T scale = T(1) / a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) *= scale;
        inv(col, j) *= scale;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        const T f = a(r, col);
        if (f == T(0)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  void require_square(const char* what) const {
    if (!square()) throw InvalidArgument(std::string(what) + ": matrix is not square");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Tr(A^m) for m = 1..max_power; entry m-1 holds Tr(A^m).
template <class T>
std::vector<T> power_traces(const Matrix<T>& a, int max_power) {
  if (!a.square()) throw InvalidArgument("power traces: matrix is not square");
  std::vector<T> out;
  if (max_power < 1) return out;
  Matrix<T> p = a;
  out.push_back(p.trace());
  for (int m = 2; m <= max_power; ++m) {
    p = p * a;
    out.push_back(p.trace());
  }
  return out;
}

/// Exact positive-definiteness test for a symmetric rational matrix: every
/// leading principal minor positive (computed by fraction-free elimination).
bool is_positive_definite(const RationalMatrix& a);

}  // namespace wgcalc
