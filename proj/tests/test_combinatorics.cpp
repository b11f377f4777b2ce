// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wgcalc/combinatorics.hpp"
#include "wgcalc/config.hpp"
#include "wgcalc/error.hpp"

using namespace wgcalc;

namespace {

// (1 2 5)(3 4)(6 8)(7)
Permutation sample_s8() { return Permutation::from_cycles(8, {{1, 2, 5}, {3, 4}, {6, 8}}); }

}  // namespace

TEST_CASE("partition validation and parsing") {
  CHECK(Partition::parse("3, 2,2,1").parts() == std::vector<int>{3, 2, 2, 1});
  CHECK(Partition::parse("3,2,2,1").weight() == 8);
  CHECK(Partition::parse("3,2,2,1").length() == 4);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("2,x"), InvalidArgument);
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
}

TEST_CASE("partitions come in reverse lexicographic order") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[3] == Partition({2, 1, 1}));
  CHECK(p4[4] == Partition::ones(4));
  CHECK(partitions_of(10).size() == 42);
}

TEST_CASE("cycle type") {
  const auto pi = sample_s8();
  CHECK(cycle_type(pi) == Partition({3, 2, 2, 1}));
  CHECK(kappa(pi) == 4);
  CHECK(cycle_type(Permutation::identity(5)) == Partition::ones(5));
  CHECK(cycle_type(Permutation{2, 3, 4, 5, 1}) == Partition({5}));
  CHECK(kappa(Permutation{2, 3, 4, 5, 1}) == 1);
  CHECK(pi.to_cycle_string() == "(1 2 5)(3 4)(6 8)(7)");
}

TEST_CASE("coset type") {
  CHECK(coset_type(sample_s8()) == Partition({3, 1}));
  CHECK(kappa_prime(sample_s8()) == 2);
  CHECK(coset_type(Permutation::identity(6)) == Partition::ones(3));
  CHECK(coset_type(Permutation{1, 3, 2, 4}) == Partition({2}));
  CHECK_THROWS_AS(coset_type(Permutation{2, 3, 1}), InvalidArgument);
}

TEST_CASE("permutation algebra") {
  const Permutation a{2, 3, 1};
  const Permutation b{2, 1, 3};
  // (a*b)(s) = a(b(s))
  CHECK((a * b)(1) == a(b(1)));
  CHECK(a * a.inverse() == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidArgument);
}

TEST_CASE("cycle type is a class function") {
  std::mt19937 rng(7);
  for (int k = 1; k <= 6; ++k) {
    const auto group = enumerate_sym(k);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& pi = group[pick(rng)];
      const auto& rho = group[pick(rng)];
      CHECK(cycle_type(rho * pi * rho.inverse()) == cycle_type(pi));
    }
  }
}

TEST_CASE("coset type is H_k-biinvariant") {
  std::mt19937 rng(11);
  for (int k = 1; k <= 4; ++k) {
    std::vector<Permutation> hk;
    for_each_hyperoctahedral(k, [&](const Permutation& z) { hk.push_back(z); });
    CHECK(hk.size() == (std::size_t{1} << k) * factorial(k).get_ui());
    const auto group = enumerate_sym(2 * k);
    std::uniform_int_distribution<std::size_t> pick_h(0, hk.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_g(0, group.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& s = group[pick_g(rng)];
      const auto& z1 = hk[pick_h(rng)];
      const auto& z2 = hk[pick_h(rng)];
      CHECK(coset_type(z1 * s * z2) == coset_type(s));
    }
  }
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_sym(3).size() == 6);
  CHECK(enumerate_sym(1).size() == 1);
  CHECK(enumerate_sym(1)[0] == Permutation::identity(1));
  const auto s4 = enumerate_sym(4);
  CHECK(std::is_sorted(s4.begin(), s4.end()));
  CHECK(std::set<Permutation>(s4.begin(), s4.end()).size() == 24);
  int transpositions = 0;
  for (const auto& p : enumerate_sym(3)) transpositions += cycle_type(p) == Partition({2, 1});
  CHECK(transpositions == 3);

  CHECK(enumerate_pairings(1).size() == 1);
  CHECK(enumerate_pairings(2).size() == 3);
  CHECK(enumerate_pairings(3).size() == 15);
  const auto m8 = enumerate_pairings(4);
  CHECK(m8.size() == 105);
  CHECK(std::set<PairPartition>(m8.begin(), m8.end()).size() == 105);
  CHECK(std::is_sorted(m8.begin(), m8.end()));
}

TEST_CASE("enumeration guards") {
  const Limits saved = limits();
  Limits tight = saved;
  tight.max_sym_k = 3;
  tight.max_pairing_k = 2;
  set_limits(tight);
  CHECK_THROWS_AS(enumerate_sym(4), CapacityError);
  CHECK_THROWS_AS(enumerate_pairings(3), CapacityError);
  CHECK_THROWS_AS(enumerate_sym(0), InvalidArgument);
  set_limits(saved);
  CHECK(enumerate_sym(4).size() == 24);
}

TEST_CASE("pair partitions normalize and round-trip") {
  const PairPartition p({{4, 1}, {3, 2}});
  CHECK(p.word() == std::vector<int>{1, 4, 2, 3});
  CHECK(PairPartition::from_word(p.to_permutation().images()) == p);
  CHECK(PairPartition::identity(2).word() == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(PairPartition({{1, 2}, {2, 3}}), InvalidArgument);
  for (const auto& m : enumerate_pairings(4)) {
    CHECK(PairPartition::from_word(m.to_permutation().images()) == m);
    CHECK(PairPartition(m.pairs()) == m);
  }
}

TEST_CASE("z_mu and class sizes") {
  CHECK(z_mu(Partition::ones(5)) == 120);
  CHECK(z_mu(Partition({6})) == 6);
  CHECK(z_mu(Partition({3, 2, 2, 1})) == 24);
  CHECK(class_size(Partition({2, 1})) == 3);
  for (int k = 1; k <= 8; ++k) {
    Integer sym = 0;
    Integer pairings = 0;
    for (const auto& mu : partitions_of(k)) {
      sym += class_size(mu);
      pairings += pairing_class_size(mu);
    }
    CHECK(sym == factorial(k));
    CHECK(pairings == double_factorial(2 * k - 1));
  }
}

TEST_CASE("pairing class sizes match a brute-force count") {
  for (int k = 1; k <= 5; ++k) {
    std::map<Partition, Integer> counts;
    for_each_pairing(k, [&](const PairPartition& p) { counts[coset_type(p)] += 1; });
    for (const auto& mu : partitions_of(k)) CHECK(counts[mu] == pairing_class_size(mu));
  }
}

TEST_CASE("delta functions") {
  CHECK(delta_u(Permutation::identity(3), {1, 2, 3}, {1, 2, 3}));
  CHECK_FALSE(delta_u(Permutation::identity(1), {1}, {2}));
  CHECK(delta_u(Permutation{2, 1}, {1, 2}, {2, 1}));
  CHECK_THROWS_AS(delta_u(Permutation::identity(2), {1, 2}, {1}), InvalidArgument);
  CHECK(delta_o(PairPartition::identity(2), {5, 5, 7, 7}));
  CHECK_FALSE(delta_o(PairPartition({{1, 3}, {2, 4}}), {5, 5, 7, 7}));
  CHECK_THROWS_AS(delta_o(Permutation::identity(4), {1, 1}), InvalidArgument);
}

TEST_CASE("trace monomials") {
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  const Rational t1 = a.trace();
  const Rational t2 = (a * a).trace();
  const Rational t3 = (a * a * a).trace();
  CHECK(trace_monomial_u(sample_s8(), a) == t3 * t2 * t2 * t1);
  CHECK(trace_monomial_o(sample_s8(), a) == t3 * t1);
  CHECK(trace_monomial_u(Permutation::identity(3), RationalMatrix::identity(4)) == 64);
  CHECK_THROWS_AS(trace_monomial_u(Permutation::identity(1), RationalMatrix(2, 3)), InvalidArgument);
}

// Tr_π(D) = Σ_r δ_π(r, r) d_{r_1}...d_{r_k} for diagonal D, and the
// orthogonal analogue Tr'_σ(D) = Σ_r δ'_σ(r) d_{r_1} d_{r_3} ... d_{r_{2k-1}}.
TEST_CASE("trace monomials of diagonal matrices as index sums") {
  for (int n = 1; n <= 4; ++n) {
    RationalMatrix d(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) d(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = make_rational(r + 2, 3);
    for (int k = 1; k <= 4; ++k) {
      const auto tuples = oracle::all_tuples(n, k);
      for (const auto& pi : enumerate_sym(k)) {
        Rational sum = 0;
        for (const auto& r : tuples) {
          if (!delta_u(pi, r, r)) continue;
          Rational prod = 1;
          for (int s : r) prod *= d(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(s - 1));
          sum += prod;
        }
        CHECK(sum == trace_monomial_u(pi, d));
      }
    }
    for (int k = 1; k <= 2; ++k) {
      const auto tuples = oracle::all_tuples(n, 2 * k);
      for (const auto& sigma : oracle::pairing_perms(k)) {
        Rational sum = 0;
        for (const auto& r : tuples) {
          if (!delta_o(sigma, r)) continue;
          Rational prod = 1;
          for (std::size_t s = 0; s < r.size(); s += 2) {
            prod *= d(static_cast<std::size_t>(r[s] - 1), static_cast<std::size_t>(r[s + 1] - 1));
          }
          sum += prod;
        }
        CHECK(sum == trace_monomial_o(sigma, d));
      }
    }
  }
}

TEST_CASE("hyperoctahedral membership") {
  CHECK(hyperoctahedral_contains(PairPartition::identity(3).to_permutation()));
  CHECK(hyperoctahedral_contains(Permutation{2, 1, 4, 3}));
  CHECK(hyperoctahedral_contains(Permutation::identity(4)));
  CHECK_FALSE(hyperoctahedral_contains(Permutation{1, 3, 2, 4}));
  for (const auto& s : enumerate_sym(6)) {
    CHECK(hyperoctahedral_contains(s) == (coset_type(s) == Partition::ones(3)));
  }
}

TEST_CASE("representatives have the requested type") {
  for (int k = 1; k <= 6; ++k) {
    for (const auto& mu : partitions_of(k)) {
      CHECK(cycle_type(representative_permutation(mu)) == mu);
      CHECK(coset_type(representative_pairing(mu)) == mu);
    }
  }
}
