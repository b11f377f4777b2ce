// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "wgcalc/error.hpp"

namespace wgcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw InvalidArgument("partition parts must be positive: " + to_string());
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing: " + to_string());
    }
    weight_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) throw InvalidArgument("empty part in partition '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad partition '" + std::string(text) + "'");
    }
    if (used != token.size()) throw InvalidArgument("bad partition '" + std::string(text) + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw InvalidArgument("empty partition");
  return Partition(std::move(parts));
}

Partition Partition::ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::doubled() const {
  std::vector<int> d(parts_);
  for (int& x : d) x *= 2;
  return Partition(std::move(d));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw InvalidArgument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest part first, descending: yields reverse lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer double_factorial(int n) {
  if (n <= 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer z_mu(const Partition& mu) {
  Integer z = 1;
  const auto& p = mu.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const int m = static_cast<int>(j - i);
    Integer ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(p[i]), static_cast<unsigned long>(m));
    z *= ipow * factorial(m);
    i = j;
  }
  return z;
}

Integer class_size(const Partition& mu) { return factorial(mu.weight()) / z_mu(mu); }

Integer pairing_class_size(const Partition& mu) {
  const int k = mu.weight();
  Integer num = factorial(k) << static_cast<mp_bitcnt_t>(k);
  Integer den = z_mu(mu) << static_cast<mp_bitcnt_t>(mu.length());
  return num / den;
}

PartitionIndex::PartitionIndex(int k) : k_(k), list_(partitions_of(k)) {
  lookup_.reserve(list_.size() * 2);
  for (std::size_t i = 0; i < list_.size(); ++i) {
    const auto [it, fresh] = lookup_.emplace(key(list_[i].parts()), static_cast<int>(i));
    if (!fresh) throw std::logic_error("PartitionIndex: hash collision at k=" + std::to_string(k));
  }
}

std::uint64_t PartitionIndex::key(std::span<const int> parts) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : parts) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

int PartitionIndex::index_of(std::span<const int> parts) const {
  const auto it = lookup_.find(key(parts));
  if (it != lookup_.end()) {
    const auto& found = list_[static_cast<std::size_t>(it->second)].parts();
    if (std::equal(found.begin(), found.end(), parts.begin(), parts.end())) return it->second;
  }
  std::string s;
  for (int x : parts) s += std::to_string(x) + ",";
  throw InvalidArgument("not a partition of " + std::to_string(k_) + ": " + s);
}

const PartitionIndex& PartitionIndex::of(int k) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<PartitionIndex>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<PartitionIndex>(k);
  return *slot;
}

}  // namespace wgcalc
