// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/rational.hpp"

#include <cctype>

#include "wgcalc/error.hpp"

namespace wgcalc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw InvalidArgument("not a rational number: '" + std::string(whole) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    num = parse_integer(s, text);
  } else {
    num = parse_integer(trim(s.substr(0, slash)), text);
    den = parse_integer(trim(s.substr(slash + 1)), text);
  }
  if (den == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

}  // namespace wgcalc
