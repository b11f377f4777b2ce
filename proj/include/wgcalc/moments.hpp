// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "wgcalc/combinatorics.hpp"
#include "wgcalc/linalg.hpp"
#include "wgcalc/partition.hpp"
#include "wgcalc/rational.hpp"

namespace wgcalc {

enum class TraceBasis {
  unitary,     // coefficients multiply E[Tr_τ(W)], τ by cycle type
  orthogonal,  // coefficients multiply E[Tr'_τ(W)], τ by coset type
};

/// Σ_μ c_μ E[Tr_μ(W)]: a local moment expressed through global moments.
/// Every partition of the order carries a coefficient, zeros included.
struct MomentFormula {
  int order = 0;
  TraceBasis basis = TraceBasis::unitary;
  std::vector<Rational> coefficients;  // partitions_of(order) order

  const Rational& coefficient(const Partition& mu) const;
  bool is_zero() const;

  /// Σ_μ c_μ g_μ for global moments g, one per partition in basis order.
  template <class T>
  T evaluate(std::span<const T> global_moments) const {
    if (global_moments.size() != coefficients.size()) {
      throw InvalidArgument("MomentFormula::evaluate: one global moment per partition required");
    }
    T s(0);
    for (std::size_t m = 0; m < coefficients.size(); ++m) {
      s += from_rational<T>(coefficients[m]) * global_moments[m];
    }
    return s;
  }

  friend bool operator==(const MomentFormula&, const MomentFormula&) = default;
};

/// Σ: Hermitian (real symmetric) positive definite n×n scale matrix,
/// carried together with Σ^{-1}. For exact rational input the positive
/// definiteness is checked exactly; floating input is checked for
/// self-adjointness and invertibility only.
template <class T>
class ScaleMatrix {
 public:
  explicit ScaleMatrix(Matrix<T> sigma);
  /// Σ = I_n.
  static ScaleMatrix identity(std::size_t n) { return ScaleMatrix(Matrix<T>::identity(n)); }

  std::size_t dim() const noexcept { return sigma_.rows(); }
  const Matrix<T>& matrix() const noexcept { return sigma_; }
  const Matrix<T>& inverse() const noexcept { return inverse_; }

 private:
  Matrix<T> sigma_;
  Matrix<T> inverse_;
};

/// B: p×p shape matrix with its inverse. Throws DomainError when singular.
template <class T>
class ShapeMatrix {
 public:
  explicit ShapeMatrix(Matrix<T> b);
  static ShapeMatrix identity(std::size_t p) { return ShapeMatrix(Matrix<T>::identity(p)); }

  std::size_t dim() const noexcept { return b_.rows(); }
  const Matrix<T>& matrix() const noexcept { return b_; }
  const Matrix<T>& inverse() const noexcept { return inverse_; }

 private:
  Matrix<T> b_;
  Matrix<T> inverse_;
};

// Haar moments ---------------------------------------------------------------

/// E[u_{i1 j1}...u_{ik jk} conj(u_{i'1 j'1}...u_{i'k j'k})] for Haar U in U(n).
Rational haar_unitary_moment(const IndexSeq& i, const IndexSeq& j, const IndexSeq& i_prime,
                             const IndexSeq& j_prime, int n);

/// E[u_{i1 j1}...u_{i2k j2k}] for Haar U in O(n).
Rational haar_orthogonal_moment(const IndexSeq& i, const IndexSeq& j, int n);

// Invariant matrices: local moments through global moments -----------------

/// E[w_{i1 j1}...w_{ik jk}] for a unitarily conjugation-invariant Hermitian W.
MomentFormula conj_invariant_moment_u(const IndexSeq& i, const IndexSeq& j, int n);

/// E[w_{i1 i2} w_{i3 i4}...w_{i2k-1 i2k}] for an orthogonally
/// conjugation-invariant real symmetric W.
MomentFormula conj_invariant_moment_o(const IndexSeq& i, int n);

/// E[x_{i1 j1}...x_{ik jk} conj(x_{i'1 j'1}...x_{i'k j'k})] for a
/// left-right unitarily invariant n×p X, in terms of E[Tr_π(XX*)].
MomentFormula lr_invariant_moment_u(const IndexSeq& i, const IndexSeq& j, const IndexSeq& i_prime,
                                    const IndexSeq& j_prime, int n, int p);

/// E[x_{i1 j1}...x_{i2k j2k}] for a left-right orthogonally invariant real
/// n×p X, in terms of E[Tr'_π(X X^T)].
MomentFormula lr_invariant_moment_o(const IndexSeq& i, const IndexSeq& j, int n, int p);

// Inverse Wishart traces ------------------------------------------------------

/// E[Tr_π(W^{-1})] for complex Wishart W = XX*, X n×p with columns
/// N_C(0, Σ). `inverse_power_traces[m-1]` = Tr(Σ^{-m}), m = 1..k.
/// Requires q = p - n >= k.
template <class T>
T inv_wishart_trace_u(const Permutation& pi, std::span<const T> inverse_power_traces, int n, int p);
template <class T>
T inv_wishart_trace_u(const Permutation& pi, const ScaleMatrix<T>& sigma, int p);

/// E[Tr'_π(W^{-1})] for real Wishart W = X X^T. Requires q = p - n - 1 >= 2k - 1.
template <class T>
T inv_wishart_trace_o(const PairPartition& pi, std::span<const T> inverse_power_traces, int n, int p);
template <class T>
T inv_wishart_trace_o(const PairPartition& pi, const ScaleMatrix<T>& sigma, int p);

// Pseudo-inverse of Ginibre matrices ------------------------------------------

/// E[g^{i1 j1}...g^{ik jk} conj(g^{i'1 j'1}...g^{i'k j'k})] where
/// G^- = (g^{ij}) is the p×n pseudo-inverse of an n×p complex Ginibre matrix
/// with column covariance Σ. Row indices in [p], column indices in [n].
/// Requires n >= k and q = p - n >= k.
template <class T>
T ginibre_pinv_moment_c(const IndexSeq& i, const IndexSeq& j, const IndexSeq& i_prime,
                        const IndexSeq& j_prime, const ScaleMatrix<T>& sigma, int p);

/// E[g^{i1 j1}...g^{i2k j2k}] for the real case. Requires n >= k and
/// q = p - n - 1 >= 2k - 1.
template <class T>
T ginibre_pinv_moment_r(const IndexSeq& i, const IndexSeq& j, const ScaleMatrix<T>& sigma, int p);

// Inverse compound Wishart ----------------------------------------------------

/// E[w^{i1 j1}...w^{ik jk}] for W^{-1} = (w^{ij}), W = Σ^{1/2} Z B Z* Σ^{1/2}.
/// Indices in [n]. Requires n >= k and q = p - n >= k.
///
/// Evaluated as (-1)^k Σ_{σ,ρ} Tr_σ(B^{-1}) Wg^U(σ^{-1}ρ; p, -q)
/// conj(∏_s (Σ^{-1})_{j_{ρ(s)} i_s}): the row sequence i takes the place of
/// the conjugated column sequence of the Ginibre pseudo-inverse moment.
///
/// Matches simulation only when B is a multiple of the identity; for other
/// B the true moment is not a function of the traces Tr_σ(B^{-1}) (at
/// n = 1, p = 2, B = diag(1,2) this gives 3/4 against E[1/W] = ln 2).
template <class T>
T compound_wishart_inv_c(const IndexSeq& i, const IndexSeq& j, const ScaleMatrix<T>& sigma,
                         const ShapeMatrix<T>& b);

/// E[w^{i1 i2} w^{i3 i4}...w^{i2k-1 i2k}] for the real case. Requires
/// n >= k and q = p - n - 1 >= 2k - 1. Same restriction on B as above.
template <class T>
T compound_wishart_inv_r(const IndexSeq& i, const ScaleMatrix<T>& sigma, const ShapeMatrix<T>& b);

using Complex = std::complex<double>;

}  // namespace wgcalc
