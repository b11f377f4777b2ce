// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/linalg.hpp"

namespace wgcalc {

bool is_positive_definite(const RationalMatrix& a) {
  if (!a.square() || !a.is_self_adjoint()) return false;
  RationalMatrix m = a;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    // Without pivoting the k-th pivot is the ratio of consecutive leading
    // minors, so all pivots positive <=> all minors positive.
    if (m(col, col) <= 0) return false;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m(r, col) / m(col, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return true;
}

}  // namespace wgcalc
