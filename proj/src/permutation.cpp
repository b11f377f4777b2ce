// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "wgcalc/error.hpp"

namespace wgcalc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = size();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(k));
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 1);
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      if (a < 1 || a > k || used[static_cast<std::size_t>(a - 1)]) {
        throw InvalidArgument("cycles are not disjoint within 1.." + std::to_string(k));
      }
      used[static_cast<std::size_t>(a - 1)] = 1;
      w[static_cast<std::size_t>(a - 1)] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t s = 0; s < images_.size(); ++s) {
    inv[static_cast<std::size_t>(images_[s] - 1)] = static_cast<int>(s + 1);
  }
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("permutation product: size mismatch");
  std::vector<int> w(b.images_.size());
  for (std::size_t s = 0; s < w.size(); ++s) {
    w[s] = a.images_[static_cast<std::size_t>(b.images_[s] - 1)];
  }
  Permutation r;
  r.images_ = std::move(w);
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x - 1)]) {
      seen[static_cast<std::size_t>(x - 1)] = 1;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = (*this)(x);
    }
    out += ')';
  }
  return out;
}

PairPartition::PairPartition(const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(pairs.size()) * 2;
  std::vector<std::pair<int, int>> sorted;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    for (int v : {a, b}) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
        throw InvalidArgument("pairs do not partition 1.." + std::to_string(n));
      }
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    sorted.emplace_back(a, b);
  }
  std::sort(sorted.begin(), sorted.end());
  for (auto [a, b] : sorted) {
    word_.push_back(a);
    word_.push_back(b);
  }
}

PairPartition PairPartition::from_word(const std::vector<int>& word) {
  if (word.size() % 2 != 0) throw InvalidArgument("pair partition word must have even length");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < word.size(); i += 2) pairs.emplace_back(word[i], word[i + 1]);
  return PairPartition(pairs);
}

PairPartition PairPartition::identity(int k) {
  PairPartition p;
  for (int i = 1; i <= 2 * k; ++i) p.word_.push_back(i);
  return p;
}

std::vector<std::pair<int, int>> PairPartition::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < word_.size(); i += 2) out.emplace_back(word_[i], word_[i + 1]);
  return out;
}

std::string PairPartition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < word_.size(); i += 2) {
    if (i) s += ",";
    s += "{" + std::to_string(word_[i]) + "," + std::to_string(word_[i + 1]) + "}";
  }
  return s + "}";
}

}  // namespace wgcalc
