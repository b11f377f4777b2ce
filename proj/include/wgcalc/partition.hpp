// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wgcalc/rational.hpp"

namespace wgcalc {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// Indexes cycle types, coset types and irreducible characters.
class Partition {
 public:
  Partition() = default;

  /// Validates that parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts arbitrary positive parts into decreasing order.
  static Partition from_unsorted(std::vector<int> parts);

  /// Parses "3,2,2,1" (spaces allowed).
  static Partition parse(std::string_view text);

  /// (1,1,...,1) with k ones.
  static Partition ones(int k);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Multiplicity m_i of part i.
  int multiplicity(int part) const;

  /// Each part doubled: 2λ.
  Partition doubled() const;

  /// "3,2,2,1"; the empty partition prints as "".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of k, in reverse lexicographic order: (k), (k-1,1), ...,
/// (1^k). This order is the fixed basis order of every class-indexed table.
std::vector<Partition> partitions_of(int k);

/// z_μ = ∏ i^{m_i} m_i!.
Integer z_mu(const Partition& mu);

/// Number of permutations in S_k with cycle type μ: k!/z_μ.
Integer class_size(const Partition& mu);

/// Number of pair partitions in M_{2k} with coset type μ: 2^k k!/(2^ℓ z_μ).
Integer pairing_class_size(const Partition& mu);

Integer factorial(int n);
Integer double_factorial(int n);

/// Position lookup for the partitions of a fixed k. Accepts a raw sorted
/// part list so hot loops can classify without building a Partition.
class PartitionIndex {
 public:
  explicit PartitionIndex(int k);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return list_.size(); }
  const std::vector<Partition>& partitions() const noexcept { return list_; }
  const Partition& operator[](std::size_t i) const { return list_[i]; }

  /// Index of a partition of k given as decreasing parts. Throws on a
  /// partition of a different weight.
  int index_of(std::span<const int> parts) const;
  int index_of(const Partition& p) const { return index_of(std::span<const int>(p.parts())); }

  /// Shared, immutable index for k.
  static const PartitionIndex& of(int k);

 private:
  static std::uint64_t key(std::span<const int> parts) noexcept;

  int k_;
  std::vector<Partition> list_;
  std::unordered_map<std::uint64_t, int> lookup_;
};

}  // namespace wgcalc
