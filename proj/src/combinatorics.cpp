// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "wgcalc/config.hpp"
#include "wgcalc/error.hpp"

namespace wgcalc {

namespace {

constexpr std::size_t kMaxGround = 64;

void require_small(std::size_t n) {
  if (n > kMaxGround) throw CapacityError("ground set larger than 64 points");
}

}  // namespace

int cycle_type_into(std::span<const int> word, std::span<int> out) {
  const std::size_t n = word.size();
  require_small(n);
  std::array<bool, kMaxGround> seen{};
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(word[x] - 1)) {
      seen[x] = true;
      ++len;
    }
    out[static_cast<std::size_t>(count++)] = len;
  }
  std::sort(out.begin(), out.begin() + count, std::greater<>());
  return count;
}

int coset_type_into(std::span<const int> word, std::span<int> out) {
  const std::size_t n = word.size();
  if (n % 2 != 0) throw InvalidArgument("coset type needs an even ground set, got " + std::to_string(n));
  require_small(n);
  // Γ(σ) is 2-regular: every vertex meets one base edge {2i-1,2i} and one
  // σ-edge, so components are cycles alternating the two edge kinds.
  std::array<int, kMaxGround> sigma_mate{};
  for (std::size_t i = 0; i < n; i += 2) {
    const int a = word[i] - 1;
    const int b = word[i + 1] - 1;
    sigma_mate[static_cast<std::size_t>(a)] = b;
    sigma_mate[static_cast<std::size_t>(b)] = a;
  }
  std::array<bool, kMaxGround> seen{};
  int count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int vertices = 0;
    int v = static_cast<int>(start);
    while (!seen[static_cast<std::size_t>(v)]) {
      const int mate = v ^ 1;
      seen[static_cast<std::size_t>(v)] = true;
      seen[static_cast<std::size_t>(mate)] = true;
      vertices += 2;
      v = sigma_mate[static_cast<std::size_t>(mate)];
    }
    out[static_cast<std::size_t>(count++)] = vertices / 2;
  }
  std::sort(out.begin(), out.begin() + count, std::greater<>());
  return count;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> buf(p.images().size());
  const int len = cycle_type_into(p.images(), buf);
  buf.resize(static_cast<std::size_t>(len));
  return Partition(std::move(buf));
}

int kappa(const Permutation& p) { return cycle_type(p).length(); }

Partition coset_type(const Permutation& p) {
  std::vector<int> buf(p.images().size());
  const int len = coset_type_into(p.images(), buf);
  buf.resize(static_cast<std::size_t>(len));
  return Partition(std::move(buf));
}

Partition coset_type(const PairPartition& p) { return coset_type(p.to_permutation()); }

int kappa_prime(const Permutation& p) { return coset_type(p).length(); }

void for_each_permutation(int k, const std::function<void(const Permutation&)>& visit) {
  check_capacity(k, limits().max_sym_k, "enumerate_sym");
  std::vector<int> w(static_cast<std::size_t>(k));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> enumerate_sym(int k) {
  std::vector<Permutation> out;
  for_each_permutation(k, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_pairing(int k, const std::function<void(const PairPartition&)>& visit) {
  check_capacity(k, limits().max_pairing_k, "enumerate_pairings");
  const int n = 2 * k;
  std::vector<std::pair<int, int>> pairs;
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  // Pair the smallest free point with each larger free point in turn; this
  // walks canonical words in lexicographic order.
  std::function<void()> rec = [&]() {
    int first = 1;
    while (first <= n && used[static_cast<std::size_t>(first)]) ++first;
    if (first > n) {
      visit(PairPartition(pairs));
      return;
    }
    used[static_cast<std::size_t>(first)] = 1;
    for (int second = first + 1; second <= n; ++second) {
      if (used[static_cast<std::size_t>(second)]) continue;
      used[static_cast<std::size_t>(second)] = 1;
      pairs.emplace_back(first, second);
      rec();
      pairs.pop_back();
      used[static_cast<std::size_t>(second)] = 0;
    }
    used[static_cast<std::size_t>(first)] = 0;
  };
  rec();
}

std::vector<PairPartition> enumerate_pairings(int k) {
  std::vector<PairPartition> out;
  for_each_pairing(k, [&](const PairPartition& p) { out.push_back(p); });
  return out;
}

void for_each_hyperoctahedral(int k, const std::function<void(const Permutation&)>& visit) {
  check_capacity(k, limits().max_zonal_k, "hyperoctahedral group");
  std::vector<int> blocks(static_cast<std::size_t>(k));
  std::iota(blocks.begin(), blocks.end(), 1);
  std::vector<int> w(static_cast<std::size_t>(2 * k));
  do {
    for (unsigned flips = 0; flips < (1u << k); ++flips) {
      for (int i = 0; i < k; ++i) {
        const int target = blocks[static_cast<std::size_t>(i)];
        const int f = static_cast<int>((flips >> i) & 1u);
        w[static_cast<std::size_t>(2 * i)] = 2 * target - 1 + f;
        w[static_cast<std::size_t>(2 * i + 1)] = 2 * target - f;
      }
      visit(Permutation(w));
    }
  } while (std::next_permutation(blocks.begin(), blocks.end()));
}

bool hyperoctahedral_contains(const Permutation& sigma) {
  const int n = sigma.size();
  if (n % 2 != 0) return false;
  for (int i = 1; i <= n; i += 2) {
    if ((sigma(i) + 1) / 2 != (sigma(i + 1) + 1) / 2) return false;
  }
  return true;
}

bool delta_u(const Permutation& sigma, const IndexSeq& i, const IndexSeq& i_prime) {
  const auto k = static_cast<std::size_t>(sigma.size());
  if (i.size() != k || i_prime.size() != k) {
    throw InvalidArgument("delta_u: index sequences must have length " + std::to_string(k));
  }
  for (std::size_t s = 0; s < k; ++s) {
    if (i[static_cast<std::size_t>(sigma.images()[s] - 1)] != i_prime[s]) return false;
  }
  return true;
}

bool delta_o(const Permutation& sigma, const IndexSeq& i) {
  const auto n = static_cast<std::size_t>(sigma.size());
  if (n % 2 != 0) throw InvalidArgument("delta_o: permutation must act on an even ground set");
  if (i.size() != n) throw InvalidArgument("delta_o: index sequence must have length " + std::to_string(n));
  const auto& w = sigma.images();
  for (std::size_t s = 0; s < n; s += 2) {
    if (i[static_cast<std::size_t>(w[s] - 1)] != i[static_cast<std::size_t>(w[s + 1] - 1)]) return false;
  }
  return true;
}

bool delta_o(const PairPartition& sigma, const IndexSeq& i) {
  return delta_o(sigma.to_permutation(), i);
}

}  // namespace wgcalc

namespace wgcalc {

Permutation representative_permutation(const Partition& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : mu.parts()) {
    std::vector<int> c;
    for (int s = 0; s < part; ++s) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(mu.weight(), cycles);
}

PairPartition representative_pairing(const Partition& mu) {
  std::vector<std::pair<int, int>> pairs;
  int a = 1;
  for (int m : mu.parts()) {
    pairs.emplace_back(a, a + 2 * m - 1);
    for (int s = 1; s < 2 * m - 1; s += 2) pairs.emplace_back(a + s, a + s + 1);
    a += 2 * m;
  }
  return PairPartition(pairs);
}

}  // namespace wgcalc
