// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace wgcalc {

/// Element of S_k stored by its one-based image word: images()[s-1] = π(s).
/// Products compose right to left: (a * b)(s) = a(b(s)).
class Permutation {
 public:
  Permutation() = default;

  /// Validates that the word is a bijection of {1,...,k}.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int k);

  /// Builds from disjoint cycles in one-based notation; points not listed
  /// are fixed. from_cycles(8, {{1,2,5},{3,4},{6,8}}) is (1 2 5)(3 4)(6 8).
  static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }

  /// π(s) for one-based s.
  int operator()(int s) const { return images_[static_cast<std::size_t>(s - 1)]; }

  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  /// Cycle notation, e.g. "(1 2 5)(3 4)(6 8)(7)".
  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

/// Perfect matching of {1,...,2k}. Stored in the canonical word
/// (w_1,...,w_{2k}) with w_1 < w_3 < ... < w_{2k-1} and w_{2i-1} < w_{2i};
/// equality compares canonical words.
class PairPartition {
 public:
  PairPartition() = default;

  /// Any list of k disjoint pairs covering {1,...,2k}; normalized here.
  explicit PairPartition(const std::vector<std::pair<int, int>>& pairs);

  /// Reads the blocks {w_1,w_2}, {w_3,w_4}, ... of an image word.
  static PairPartition from_word(const std::vector<int>& word);

  /// t_k pairing {{1,2},{3,4},...}.
  static PairPartition identity(int k);

  int k() const noexcept { return static_cast<int>(word_.size() / 2); }
  const std::vector<int>& word() const noexcept { return word_; }
  std::vector<std::pair<int, int>> pairs() const;

  /// The element of S_{2k} with image word equal to the canonical word.
  Permutation to_permutation() const { return Permutation(word_); }

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
  friend auto operator<=>(const PairPartition& a, const PairPartition& b) {
    return a.word_ <=> b.word_;
  }

  std::string to_string() const;

 private:
  std::vector<int> word_;
};

}  // namespace wgcalc
