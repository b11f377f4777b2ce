// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wgcalc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3/2", " 10/4 " into a canonical rational. Throws
/// InvalidArgument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced "num/den" form; integers keep an explicit "/1".
std::string to_string(const Rational& value);

/// base^exponent for a non-negative exponent; 0^0 is 1.
Rational pow(const Rational& base, unsigned exponent);

/// num/den in canonical form (mpq_class(num, den) alone does not reduce).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Nearest double when numerator and denominator are exact in double
/// (one correctly rounded division); mpq_get_d truncates otherwise.
inline double to_double(const Rational& value) {
  const auto bits_num = mpz_sizeinbase(value.get_num_mpz_t(), 2);
  const auto bits_den = mpz_sizeinbase(value.get_den_mpz_t(), 2);
  if (bits_num <= 53 && bits_den <= 53) return value.get_num().get_d() / value.get_den().get_d();
  return value.get_d();
}

}  // namespace wgcalc
