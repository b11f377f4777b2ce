// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "wgcalc/partition.hpp"
#include "wgcalc/rational.hpp"

namespace wgcalc {

/// Irreducible characters χ^λ(μ) of S_k for all λ, μ ⊢ k, rows and columns
/// in partitions_of(k) order. Built once per k and shared.
class CharacterTable {
 public:
  explicit CharacterTable(int k);

  int k() const noexcept { return index_->k(); }
  const PartitionIndex& index() const noexcept { return *index_; }

  std::int64_t operator()(std::size_t lambda, std::size_t mu) const {
    return values_[lambda * index_->size() + mu];
  }
  std::int64_t value(const Partition& lambda, const Partition& mu) const;

  /// Shared table for k, guarded by the class-algebra limit.
  static const CharacterTable& of(int k);

 private:
  const PartitionIndex* index_;
  std::vector<std::int64_t> values_;
};

/// f^λ by the hook-length formula.
Integer dimension(const Partition& lambda);

/// χ^λ on the class of cycle type μ (Murnaghan–Nakayama). Throws
/// InvalidArgument when |λ| != |μ|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// C_λ(z) = ∏_{(i,j)∈λ} (z + j - i).
Rational c_poly(const Partition& lambda, const Rational& z);

/// C'_λ(z) = ∏_{(i,j)∈λ} (z + 2j - i - 1).
Rational c_prime_poly(const Partition& lambda, const Rational& z);

/// Zonal spherical functions ω^λ of (S_{2k}, H_k), indexed by λ ⊢ k and
/// coset type μ ⊢ k, computed by averaging χ^{2λ} over H_k.
class ZonalTable {
 public:
  explicit ZonalTable(int k);

  int k() const noexcept { return index_->k(); }
  const PartitionIndex& index() const noexcept { return *index_; }

  const Rational& operator()(std::size_t lambda, std::size_t mu) const {
    return values_[lambda * index_->size() + mu];
  }

  /// Shared table for k, guarded by limits().max_zonal_k.
  static const ZonalTable& of(int k);

 private:
  const PartitionIndex* index_;
  std::vector<Rational> values_;
};

/// ω^λ(σ) for any σ of coset type μ.
Rational zonal(const Partition& lambda, const Partition& mu);

}  // namespace wgcalc
