// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "wgcalc/combinatorics.hpp"
#include "wgcalc/config.hpp"
#include "wgcalc/error.hpp"

namespace wgcalc {

namespace {

// Memo for one fixed cycle type: (shape, position in μ) -> χ value.
using MnMemo = std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>;

// Rim hooks are removed through beta-numbers: a hook of length r moves the
// bead at b to b - r (if free); its leg length is the number of beads
// strictly between.
std::int64_t murnaghan_nakayama(const std::vector<int>& shape, const std::vector<int>& mu,
                                std::size_t pos, MnMemo& memo) {
  if (pos == mu.size()) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape, pos);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[pos];
  const int len = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta) {
      if (x > target && x < b) ++between;
    }
    std::vector<int> moved(beta);
    moved[static_cast<std::size_t>(i)] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> next;
    for (int j = 0; j < len; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = murnaghan_nakayama(next, mu, pos + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

int character_guard() {
  const auto l = limits();
  return std::max(l.max_class_k, 2 * l.max_zonal_k);
}

}  // namespace

CharacterTable::CharacterTable(int k) : index_(&PartitionIndex::of(k)) {
  const std::size_t n = index_->size();
  values_.resize(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    MnMemo memo;
    const auto& mu = (*index_)[m].parts();
    for (std::size_t l = 0; l < n; ++l) {
      values_[l * n + m] = murnaghan_nakayama((*index_)[l].parts(), mu, 0, memo);
    }
  }
}

std::int64_t CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  return (*this)(static_cast<std::size_t>(index_->index_of(lambda)),
                 static_cast<std::size_t>(index_->index_of(mu)));
}

const CharacterTable& CharacterTable::of(int k) {
  check_capacity(k, character_guard(), "character table");
  static std::mutex m;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<CharacterTable>(k);
  return *slot;
}

Integer dimension(const Partition& lambda) {
  const auto& p = lambda.parts();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j) {
      int below = 0;
      for (int r = i + 1; r < lambda.length() && p[static_cast<std::size_t>(r)] > j; ++r) ++below;
      hooks *= (p[static_cast<std::size_t>(i)] - j - 1) + below + 1;
    }
  }
  return factorial(lambda.weight()) / hooks;
}

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw InvalidArgument("character: |lambda| = " + std::to_string(lambda.weight()) +
                          " but |mu| = " + std::to_string(mu.weight()));
  }
  if (lambda.weight() == 0) return 1;
  return CharacterTable::of(lambda.weight()).value(lambda, mu);
}

Rational c_poly(const Partition& lambda, const Rational& z) {
  Rational c = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j) c *= z + (j - i);
  }
  return c;
}

Rational c_prime_poly(const Partition& lambda, const Rational& z) {
  Rational c = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j) c *= z + (2 * j - i - 1);
  }
  return c;
}

ZonalTable::ZonalTable(int k) : index_(&PartitionIndex::of(k)) {
  const std::size_t n = index_->size();
  const auto& big_index = PartitionIndex::of(2 * k);
  const auto& chi = CharacterTable::of(2 * k);

  // One pair partition per coset type serves as the class representative.
  std::vector<std::optional<Permutation>> reps(n);
  std::size_t found = 0;
  for_each_pairing(k, [&](const PairPartition& p) {
    if (found == n) return;
    const auto m = static_cast<std::size_t>(index_->index_of(coset_type(p)));
    if (!reps[m]) {
      reps[m] = p.to_permutation();
      ++found;
    }
  });

  std::vector<std::size_t> doubled(n);
  for (std::size_t l = 0; l < n; ++l) {
    doubled[l] = static_cast<std::size_t>(big_index.index_of((*index_)[l].doubled()));
  }

  const Integer group_order = factorial(k) << static_cast<mp_bitcnt_t>(k);
  values_.resize(n * n);
  std::vector<int> buf(static_cast<std::size_t>(2 * k));
  for (std::size_t m = 0; m < n; ++m) {
    // Histogram of cycle types of σζ over ζ ∈ H_k.
    std::vector<long long> counts(big_index.size(), 0);
    const Permutation& sigma = *reps[m];
    for_each_hyperoctahedral(k, [&](const Permutation& zeta) {
      const Permutation prod = sigma * zeta;
      const int len = cycle_type_into(prod.images(), buf);
      ++counts[static_cast<std::size_t>(big_index.index_of(std::span<const int>(buf.data(), static_cast<std::size_t>(len))))];
    });
    for (std::size_t l = 0; l < n; ++l) {
      Integer sum = 0;
      for (std::size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] == 0) continue;
        sum += Integer(static_cast<long>(counts[c])) * Integer(static_cast<long>(chi(doubled[l], c)));
      }
      values_[l * n + m] = make_rational(sum, group_order);
    }
  }
}

const ZonalTable& ZonalTable::of(int k) {
  check_capacity(k, limits().max_zonal_k, "zonal spherical functions");
  static std::mutex m;
  static std::map<int, std::unique_ptr<ZonalTable>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<ZonalTable>(k);
  return *slot;
}

Rational zonal(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw InvalidArgument("zonal: weight mismatch");
  const auto& t = ZonalTable::of(lambda.weight());
  return t(static_cast<std::size_t>(t.index().index_of(lambda)),
           static_cast<std::size_t>(t.index().index_of(mu)));
}

}  // namespace wgcalc
