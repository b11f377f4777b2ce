// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

namespace wgcalc {

/// Size guards. Element-wise enumerations grow factorially in k, so every
/// entry point that walks S_k, M_{2k} or H_k checks one of these first.
struct Limits {
  int max_sym_k = 9;         // full walks over S_k
  int max_pairing_k = 8;     // full walks over M_{2k}
  int max_zonal_k = 6;       // zonal functions and Wg^O (H_k averaging)
  int max_class_k = 12;      // class-function algebra (characters, Wg^U)
  int max_double_sum_k = 7;  // moment formulas summing over pairs of S_k
};

/// Current guards. On first use the defaults are overridden by the
/// WGCALC_MAX_K environment variable when it holds a positive integer.
Limits limits();

/// Replaces the guards for the whole process (tests and the CLI use this).
void set_limits(const Limits& limits);

/// Throws CapacityError when k is outside [1, bound].
void check_capacity(int k, int bound, std::string_view what);

}  // namespace wgcalc
