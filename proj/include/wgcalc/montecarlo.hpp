// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wgcalc/combinatorics.hpp"
#include "wgcalc/linalg.hpp"

namespace wgcalc {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Standard normal variates by Box–Muller on a 64-bit Mersenne Twister.
/// One stream per Monte Carlo chunk, keyed by (seed, chunk).
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream);

  /// N(0,1).
  double real();
  /// Standard complex normal: E[z z̄] = 1, E[z²] = 0.
  std::complex<double> complex();

 private:
  double uniform_open();  // (0, 1]

  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// n×p matrix with i.i.d. standard complex (real) normal entries.
ComplexMatrix standard_ginibre_c(int n, int p, NormalStream& rng);
RealMatrix standard_ginibre_r(int n, int p, NormalStream& rng);

/// G = Σ^{1/2} Z for a precomputed root Σ^{1/2}.
ComplexMatrix sample_ginibre_c(int p, const ComplexMatrix& sigma_root, NormalStream& rng);
RealMatrix sample_ginibre_r(int p, const RealMatrix& sigma_root, NormalStream& rng);

/// Haar unitary (orthogonal) matrix: QR of a Ginibre matrix with the
/// diagonal of R rotated to the positive reals.
ComplexMatrix sample_haar_unitary(int n, NormalStream& rng);
RealMatrix sample_haar_orthogonal(int n, NormalStream& rng);

/// PSD square root of a Hermitian (symmetric) positive semidefinite matrix.
/// Throws DomainError on an eigenvalue below -1e-12·‖Σ‖.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& sigma);
RealMatrix hermitian_sqrt(const RealMatrix& sigma);

/// Moore–Penrose inverse of a full-rank G: G*(GG*)^{-1} when rows ≤ cols,
/// (G*G)^{-1}G* otherwise. Throws NumericalError when the Gram matrix has
/// reciprocal condition number below `min_rcond`.
ComplexMatrix pseudo_inverse(const ComplexMatrix& g, double min_rcond = 1e-10);
RealMatrix pseudo_inverse(const RealMatrix& g, double min_rcond = 1e-10);

/// Largest relative residual of the four Moore–Penrose conditions.
double moore_penrose_residual(const ComplexMatrix& g, const ComplexMatrix& g_pinv);
double moore_penrose_residual(const RealMatrix& g, const RealMatrix& g_pinv);

enum class Model {
  haar_u,
  haar_o,
  ginibre_pinv_c,
  ginibre_pinv_r,
  inv_wishart_c,
  inv_wishart_r,
  compound_inv_c,
  compound_inv_r,
  conj_invariant_demo,
};

std::string_view model_name(Model m);
/// Parses "haar-u", "ginibre-pinv-c", ...; throws InvalidArgument.
Model parse_model(std::string_view name);
bool is_real_model(Model m);

/// A matrix parameter (Σ or B). `exact` is present when the input was
/// rational; exact references are then computed in rational arithmetic.
/// An empty value stands for the identity of the model's dimension.
struct MatrixSpec {
  Matrix<std::complex<double>> value;
  std::optional<RationalMatrix> exact;

  static MatrixSpec from_rational(const RationalMatrix& m);
  static MatrixSpec from_complex(Matrix<std::complex<double>> m);
  bool empty() const noexcept { return value.rows() == 0; }
};

/// What to sample and which entries to multiply.
///
///   haar-u          n; i, j, i', j' in [n]          ∏ u_{i j} conj(∏ u_{i' j'})
///   haar-o          n; i, j in [n], even length     ∏ o_{i j}
///   ginibre-pinv-c  n, p, Σ; i, i' in [p]; j, j' in [n]
///   ginibre-pinv-r  n, p, Σ; i in [p], j in [n]
///   inv-wishart-c   n, p, Σ; word = π ∈ S_k          Tr_π(W^{-1})
///   inv-wishart-r   n, p, Σ; word = pairing of [2k]   Tr'_π(W^{-1})
///   compound-inv-c  n, Σ, B (p×p); i, j in [n]        ∏ (W^{-1})_{i j}
///   compound-inv-r  n, Σ, B; i in [n], even length    ∏ (W^{-1})_{i_{2s-1} i_{2s}}
///   conj-invariant-demo  n, p; i, j in [n]: for white W = ZZ*,
///                   ∏ w_{i j} - Σ_μ c_μ Tr_μ(W), whose mean is 0
struct ModelSpec {
  Model model = Model::haar_u;
  int n = 0;
  int p = 0;
  IndexSeq i, j, i_prime, j_prime;
  std::vector<int> word;
  MatrixSpec sigma;
  MatrixSpec b;
};

struct EstimatorOptions {
  std::int64_t samples = 200000;
  std::uint64_t seed = 42;
  int threads = 0;  // 0: hardware concurrency
  int chunk_size = 4096;
  std::optional<std::complex<double>> expected;  // overrides the exact reference
};

struct EstimatorResult {
  std::string model;
  std::complex<double> estimate;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  int chunk_size = 0;
  std::int64_t resampled = 0;  // draws rejected as numerically singular
  std::optional<std::complex<double>> exact;
  std::optional<double> z_score;
};

/// Exact value of the expectation estimated for `spec`, from the moments
/// module: a Rational when every matrix parameter is exact (or the
/// identity), otherwise complex double. Throws DomainError outside the
/// validity range.
std::variant<Rational, std::complex<double>> exact_value(const ModelSpec& spec);
std::complex<double> exact_reference(const ModelSpec& spec);
std::complex<double> to_complex(const std::variant<Rational, std::complex<double>>& v);

/// Monte Carlo estimate of the expectation described by `spec`.
/// Results depend only on (spec, samples, seed, chunk_size), never on the
/// thread count.
EstimatorResult estimate_moment(const ModelSpec& spec, const EstimatorOptions& options);

/// max over real and imaginary parts of |estimate - exact| / stderr. A
/// component whose stderr and deviation are both below
/// 1e-10·max(|estimate|, |exact|, stderrs) counts as roundoff and scores 0;
/// otherwise zero stderr with a nonzero deviation scores infinity.
double z_score(std::complex<double> estimate, double stderr_re, double stderr_im,
               std::complex<double> exact);

}  // namespace wgcalc
