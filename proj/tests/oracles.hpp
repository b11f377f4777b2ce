// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by the tests. None of them
// goes through the character or zonal expansions.

#pragma once

#include <map>
#include <random>
#include <vector>

#include "wgcalc/characters.hpp"
#include "wgcalc/combinatorics.hpp"
#include "wgcalc/linalg.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc::oracle {

inline std::vector<Permutation> pairing_perms(int k) {
  std::vector<Permutation> out;
  for (const auto& p : enumerate_pairings(k)) out.push_back(p.to_permutation());
  return out;
}

inline Rational power(const Rational& z, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

/// (f*g)(π) = Σ_{τ∈S_k} f(τ) g(τ^{-1}π) by a double loop over S_k.
inline ClassFunction brute_convolve(const ClassFunction& f, const ClassFunction& g) {
  const int k = f.k();
  const auto group = enumerate_sym(k);
  ClassFunction h(k);
  for (const auto& mu : PartitionIndex::of(k).partitions()) {
    const auto pi = representative_permutation(mu);
    Rational s = 0;
    for (const auto& tau : group) s += f.at(cycle_type(tau)) * g.at(cycle_type(tau.inverse() * pi));
    h.at(mu) = s;
  }
  return h;
}

/// (2^k k!)^{-1} Σ_{τ∈S_{2k}} f(τ) g(τ^{-1}σ) by brute force over S_{2k}.
inline BiinvariantFunction brute_sharp(const BiinvariantFunction& f, const BiinvariantFunction& g) {
  const int k = f.k();
  const auto group = enumerate_sym(2 * k);
  const Integer hk = factorial(k) << static_cast<mp_bitcnt_t>(k);
  BiinvariantFunction h(k);
  for (const auto& mu : PartitionIndex::of(k).partitions()) {
    const auto sigma = representative_pairing(mu).to_permutation();
    Rational s = 0;
    for (const auto& tau : group) s += f.at(coset_type(tau)) * g.at(coset_type(tau.inverse() * sigma));
    h.at(mu) = make_rational(s.get_num(), s.get_den() * hk);
  }
  return h;
}

/// Reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(piv, c));
    const Rational lead = a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) /= lead;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

/// Moore–Penrose inverse over Q by full-rank factorization G = F C:
/// G⁺ = Cᵀ (C Cᵀ)^{-1} (Fᵀ F)^{-1} Fᵀ.
inline RationalMatrix moore_penrose(const RationalMatrix& g) {
  RationalMatrix e = g;
  const auto pivots = rref(e);
  const std::size_t r = pivots.size();
  if (r == 0) return RationalMatrix(g.cols(), g.rows());
  RationalMatrix f(g.rows(), r);
  RationalMatrix c(r, g.cols());
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < g.rows(); ++i) f(i, j) = g(i, pivots[j]);
    for (std::size_t i = 0; i < g.cols(); ++i) c(j, i) = e(j, i);
  }
  const auto ct = transpose(c);
  const auto ft = transpose(f);
  return ct * (c * ct).inverse() * (ft * f).inverse() * ft;
}

/// [z^{κ(σ^{-1}τ)}] over S_k, or [z^{κ'(σ^{-1}τ)}] over M_{2k}.
inline RationalMatrix gram(const std::vector<Permutation>& elems, const Rational& z, bool coset) {
  RationalMatrix g(elems.size(), elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const auto prod = elems[a].inverse() * elems[b];
      g(a, b) = power(z, coset ? kappa_prime(prod) : kappa(prod));
    }
  return g;
}

/// Standard Young tableaux of shape λ: remove a corner cell in every
/// possible way.
inline Integer standard_tableaux(std::vector<int> shape) {
  static std::map<std::vector<int>, Integer> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  Integer total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[r];
    total += standard_tableaux(smaller);
  }
  memo[shape] = total;
  return total;
}

/// Symmetric positive definite M Mᵀ + I with small integer M, over Q.
inline RationalMatrix random_pd(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = make_rational(d(rng), 2);
  auto pd = m * transpose(m);
  for (std::size_t i = 0; i < n; ++i) pd(i, i) += 1;
  return pd;
}

/// All index tuples in [n]^len.
inline std::vector<IndexSeq> all_tuples(int n, int len) {
  std::vector<IndexSeq> out;
  IndexSeq t(static_cast<std::size_t>(len), 1);
  while (true) {
    out.push_back(t);
    int pos = len - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n) t[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace wgcalc::oracle
