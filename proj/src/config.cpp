// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/config.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include "wgcalc/error.hpp"

namespace wgcalc {

namespace {

std::mutex& limits_mutex() {
  static std::mutex m;
  return m;
}

Limits initial_limits() {
  Limits l;
  if (const char* env = std::getenv("WGCALC_MAX_K")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) {
      const int k = static_cast<int>(v);
      l.max_sym_k = l.max_pairing_k = l.max_zonal_k = l.max_double_sum_k = k;
      if (k > l.max_class_k) l.max_class_k = k;
    }
  }
  return l;
}

Limits& current() {
  static Limits l = initial_limits();
  return l;
}

}  // namespace

Limits limits() {
  std::lock_guard lock(limits_mutex());
  return current();
}

void set_limits(const Limits& l) {
  std::lock_guard lock(limits_mutex());
  current() = l;
}

void check_capacity(int k, int bound, std::string_view what) {
  if (k < 1) {
    throw InvalidArgument(std::string(what) + ": k must be positive, got " + std::to_string(k));
  }
  if (k > bound) {
    throw CapacityError(std::string(what) + ": k=" + std::to_string(k) +
                        " exceeds the guard " + std::to_string(bound) +
                        " (raise it with WGCALC_MAX_K)");
  }
}

}  // namespace wgcalc
