// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wgcalc/error.hpp"
#include "wgcalc/weingarten.hpp"

using namespace wgcalc;

namespace {

ClassFunction random_class_function(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  ClassFunction f(k);
  for (std::size_t m = 0; m < f.size(); ++m) f[m] = d(rng);
  return f;
}

BiinvariantFunction random_biinvariant(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  BiinvariantFunction f(k);
  for (std::size_t m = 0; m < f.size(); ++m) f[m] = make_rational(d(rng), 2);
  return f;
}

Rational rising(int n, int k, int step) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= n + step * i;
  return r;
}

}  // namespace

TEST_CASE("basis functions") {
  const auto p = power_class(2, 7);
  CHECK(p.at(Partition({1, 1})) == 49);
  CHECK(p.at(Partition({2})) == 7);
  CHECK(power_coset(1, Rational(2, 3)).at(Partition({1})) == Rational(2, 3));
  const auto e = delta_e(3);
  CHECK(e.at(Partition::ones(3)) == 1);
  CHECK(e.at(Partition({2, 1})) == 0);
  CHECK(e.at(Partition({3})) == 0);
  const auto one = one_hk(3);
  for (const auto& mu : partitions_of(3)) CHECK(one.at(mu) == (mu == Partition::ones(3) ? 1 : 0));
}

TEST_CASE("Fourier round trip") {
  std::mt19937 rng(3);
  for (int k = 1; k <= 6; ++k) {
    const auto f = random_class_function(k, rng);
    CHECK(from_fourier(k, fourier_coefficients(f)) == f);
  }
}

TEST_CASE("convolution matches the group-algebra double loop") {
  std::mt19937 rng(5);
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = random_class_function(k, rng);
      const auto g = random_class_function(k, rng);
      CHECK(convolve(f, g) == oracle::brute_convolve(f, g));
    }
    const auto f = random_class_function(k, rng);
    CHECK(convolve(f, delta_e(k)) == f);
  }
  CHECK_THROWS_AS(convolve(delta_e(2), delta_e(3)), InvalidArgument);
}

TEST_CASE("sharp product matches the scaled S_{2k} convolution") {
  std::mt19937 rng(9);
  for (int k = 1; k <= 2; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = random_biinvariant(k, rng);
      const auto g = random_biinvariant(k, rng);
      CHECK(convolve_sharp(f, g) == oracle::brute_sharp(f, g));
    }
  }
  for (int k = 1; k <= 4; ++k) {
    const auto f = random_biinvariant(k, rng);
    CHECK(convolve_sharp(f, one_hk(k)) == f);
    CHECK(convolve_sharp(one_hk(k), f) == f);
  }
}

TEST_CASE("unitary Weingarten values") {
  CHECK(wg_unitary(1, 7).at(Partition({1})) == Rational(1, 7));
  for (int n = 2; n <= 9; ++n) {
    const auto w = wg_unitary(2, n);
    CHECK(w.at(Partition({1, 1})) == Rational(1, n * n - 1));
    CHECK(w.at(Partition({2})) == Rational(-1, n * (n * n - 1)));
  }
  // z = 1: only λ = (2) survives.
  const auto w1 = wg_unitary(2, 1);
  CHECK(w1.at(Partition({2})) == Rational(1, 4));
  CHECK(w1.at(Partition({1, 1})) == Rational(1, 4));
  CHECK(wg_unitary(2, 0) == ClassFunction(2));
  CHECK(wg_unitary(1, Rational(-3, 2)).at(Partition({1})) == Rational(-2, 3));
}

TEST_CASE("unitary Weingarten inverts the power function") {
  for (int k = 1; k <= 6; ++k)
    for (int n = k; n <= k + 3; ++n) CHECK(convolve(power_class(k, n), wg_unitary(k, n)) == delta_e(k));
}

TEST_CASE("sums of Weingarten values") {
  for (int k = 1; k <= 6; ++k) {
    for (int n : {k, k + 1, 10, 25}) {
      const auto w = wg_unitary(k, n);
      Rational s = 0;
      for (const auto& mu : partitions_of(k)) s += Rational(class_size(mu)) * w.at(mu);
      CHECK(s == 1 / rising(n, k, 1));
    }
  }
  for (int k = 1; k <= 4; ++k) {
    for (int n : {2 * k, 10}) {
      const auto w = wg_orthogonal(k, n);
      Rational s = 0;
      for (const auto& mu : partitions_of(k)) s += Rational(pairing_class_size(mu)) * w.at(mu);
      CHECK(s == 1 / rising(n, k, 2));
    }
  }
}

TEST_CASE("orthogonal Weingarten values") {
  CHECK(wg_orthogonal(1, 3).at(Partition({1})) == Rational(1, 3));
  for (int n = 2; n <= 8; ++n) {
    const auto w = wg_orthogonal(2, n);
    CHECK(w.at(Partition({1, 1})) == make_rational(n + 1, n * (n - 1) * (n + 2)));
    CHECK(w.at(Partition({2})) == Rational(-1, n * (n - 1) * (n + 2)));
  }
  for (int k = 1; k <= 4; ++k)
    for (int n = 2 * k; n <= 2 * k + 2; ++n)
      CHECK(convolve_sharp(power_coset(k, n), wg_orthogonal(k, n)) == one_hk(k));
}

TEST_CASE("Weingarten equals the Gram pseudo-inverse") {
  for (int k = 1; k <= 3; ++k) {
    const auto elems = enumerate_sym(k);
    for (int z = -4; z <= 4; ++z) {
      const auto pinv = oracle::moore_penrose(oracle::gram(elems, z, false));
      const auto w = wg_unitary(k, z);
      for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
          CHECK(pinv(a, b) == w.at(cycle_type(elems[a].inverse() * elems[b])));
    }
  }
  for (int k = 1; k <= 2; ++k) {
    const auto elems = oracle::pairing_perms(k);
    for (int z = -4; z <= 4; ++z) {
      const auto pinv = oracle::moore_penrose(oracle::gram(elems, z, true));
      const auto w = wg_orthogonal(k, z);
      for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
          CHECK(pinv(a, b) == w.at(coset_type(elems[a].inverse() * elems[b])));
    }
  }
}

TEST_CASE("pseudo-inverse identities at every integer parameter") {
  for (int k = 1; k <= 4; ++k)
    for (int z = -6; z <= 6; ++z) CHECK(verify_pseudo_inverse(Ensemble::unitary, k, z));
  for (int k = 1; k <= 3; ++k)
    for (int z = -6; z <= 6; ++z) CHECK(verify_pseudo_inverse(Ensemble::orthogonal, k, z));
  CHECK(verify_pseudo_inverse(Ensemble::unitary, 3, Rational(5, 2)));
}

TEST_CASE("double Weingarten functions") {
  CHECK(wg_unitary_double(1, 3, 5).at(Partition({1})) == Rational(1, 15));
  CHECK(wg_orthogonal_double(1, 3, 5).at(Partition({1})) == Rational(1, 15));
  for (int k = 1; k <= 4; ++k) {
    for (int n = k; n <= k + 2; ++n) {
      CHECK(wg_unitary_double(k, n, n) == oracle::brute_convolve(wg_unitary(k, n), wg_unitary(k, n)));
    }
    for (auto [z, w] : {std::pair{5, 9}, std::pair{-7, 11}, std::pair{6, -13}}) {
      CHECK(wg_unitary_double(k, z, w) == wg_unitary_double_by_convolution(k, z, w));
      CHECK(wg_unitary_double(k, z, w) == wg_unitary_double(k, w, z));
      CHECK(wg_orthogonal_double(k, z, w) == wg_orthogonal_double_by_convolution(k, z, w));
      CHECK(wg_orthogonal_double(k, z, w) == wg_orthogonal_double(k, w, z));
    }
  }
}

TEST_CASE("capacity guards") {
  CHECK_THROWS_AS(wg_unitary(60, 3), CapacityError);
  CHECK_THROWS_AS(wg_orthogonal(30, 3), CapacityError);
  CHECK_THROWS_AS(wg_unitary(0, 3), InvalidArgument);
}
