// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wgcalc/linalg.hpp"
#include "wgcalc/partition.hpp"
#include "wgcalc/permutation.hpp"

namespace wgcalc {

/// Index sequence (i_1,...,i_k); entries are one-based.
using IndexSeq = std::vector<int>;

/// Sorted multiset of cycle lengths.
Partition cycle_type(const Permutation& p);

/// κ(π): number of cycles.
int kappa(const Permutation& p);

/// Half-sizes of the connected components of Γ(σ), the multigraph on
/// {1..2k} with edges {2i-1,2i} and {σ(2i-1),σ(2i)} (duplicates kept).
/// Throws InvalidArgument on an odd ground set.
Partition coset_type(const Permutation& p);
Partition coset_type(const PairPartition& p);

/// κ'(σ): number of components of Γ(σ).
int kappa_prime(const Permutation& p);

/// Allocation-free variants for inner loops. `word` is a one-based image
/// word; `out` receives the decreasing parts and must have room for
/// word.size() entries. Returns the number of parts written.
int cycle_type_into(std::span<const int> word, std::span<int> out);
int coset_type_into(std::span<const int> word, std::span<int> out);

/// Calls `visit` on every element of S_k in lexicographic order of image
/// words. Guarded by limits().max_sym_k.
void for_each_permutation(int k, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_sym(int k);

/// Calls `visit` on every pair partition of [2k] in lexicographic order of
/// canonical words. Guarded by limits().max_pairing_k.
void for_each_pairing(int k, const std::function<void(const PairPartition&)>& visit);
std::vector<PairPartition> enumerate_pairings(int k);

/// Calls `visit` on every element of the hyperoctahedral group H_k ⊂ S_{2k}
/// (2^k k! elements). Guarded by limits().max_zonal_k.
void for_each_hyperoctahedral(int k, const std::function<void(const Permutation&)>& visit);

/// True iff σ commutes with t_k = (1 2)(3 4)...(2k-1 2k).
bool hyperoctahedral_contains(const Permutation& sigma);

/// δ_σ(i,i') = ∏_s [i_{σ(s)} = i'_s].
bool delta_u(const Permutation& sigma, const IndexSeq& i, const IndexSeq& i_prime);

/// δ'_σ(i) = ∏_s [i_{σ(2s-1)} = i_{σ(2s)}].
bool delta_o(const Permutation& sigma, const IndexSeq& i);
bool delta_o(const PairPartition& sigma, const IndexSeq& i);

/// ∏_j Tr(A^{μ_j}) given the power traces t[m-1] = Tr(A^m).
template <class T>
T trace_product(const Partition& mu, std::span<const T> power_traces) {
  T r(1);
  for (int part : mu.parts()) {
    if (part > static_cast<int>(power_traces.size())) {
      throw InvalidArgument("trace_product: missing power trace Tr(A^" + std::to_string(part) + ")");
    }
    r *= power_traces[static_cast<std::size_t>(part - 1)];
  }
  return r;
}

/// Tr_π(A) = ∏ Tr(A^{μ_j}) over the cycle type μ of π.
template <class T>
T trace_monomial_u(const Permutation& pi, const Matrix<T>& a) {
  if (!a.square()) throw InvalidArgument("trace_monomial_u: matrix is not square");
  const auto mu = cycle_type(pi);
  const auto t = power_traces(a, mu.length() ? mu[0] : 0);
  return trace_product<T>(mu, t);
}

/// Tr'_σ(A) = ∏ Tr(A^{μ_j}) over the coset type μ of σ.
template <class T>
T trace_monomial_o(const Permutation& sigma, const Matrix<T>& a) {
  if (!a.square()) throw InvalidArgument("trace_monomial_o: matrix is not square");
  const auto mu = coset_type(sigma);
  const auto t = power_traces(a, mu.length() ? mu[0] : 0);
  return trace_product<T>(mu, t);
}

}  // namespace wgcalc

namespace wgcalc {

/// A permutation of cycle type μ: consecutive blocks (1..μ_1)(μ_1+1..)...
Permutation representative_permutation(const Partition& mu);

/// A pair partition of coset type μ: on each block of 2m consecutive points
/// a, ..., a+2m-1 the pairs {a, a+2m-1}, {a+1, a+2}, ..., {a+2m-3, a+2m-2}.
PairPartition representative_pairing(const Partition& mu);

}  // namespace wgcalc
