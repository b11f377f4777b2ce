// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/weingarten.hpp"

#include <map>
#include <optional>
#include <memory>
#include <mutex>

#include "wgcalc/characters.hpp"
#include "wgcalc/combinatorics.hpp"
#include "wgcalc/config.hpp"
#include "wgcalc/error.hpp"

namespace wgcalc {

namespace {

void require_same_k(int a, int b, const char* what) {
  if (a != b) {
    throw InvalidArgument(std::string(what) + ": weight mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

// Structure constants of the ♯ algebra: counts[μ][a][b] is the number of
// τ ∈ M_{2k} with coset type of σ_μ τ equal to a and of τ^{-1} equal to b,
// σ_μ being a fixed pairing of coset type μ.
class SharpStructure {
 public:
  explicit SharpStructure(int k) : n_(PartitionIndex::of(k).size()), counts_(n_ * n_ * n_, 0) {
    const auto& index = PartitionIndex::of(k);
    const auto pairings = enumerate_pairings(k);
    std::vector<int> inv_type(pairings.size());
    std::vector<int> buf(static_cast<std::size_t>(2 * k));
    auto type_of = [&](const Permutation& p) {
      const int len = coset_type_into(p.images(), buf);
      return index.index_of(std::span<const int>(buf.data(), static_cast<std::size_t>(len)));
    };
    std::vector<std::optional<Permutation>> reps(n_);
    std::vector<Permutation> as_perm;
    as_perm.reserve(pairings.size());
    for (std::size_t t = 0; t < pairings.size(); ++t) {
      as_perm.push_back(pairings[t].to_permutation());
      inv_type[t] = type_of(as_perm.back().inverse());
      const auto own = static_cast<std::size_t>(type_of(as_perm.back()));
      if (!reps[own]) reps[own] = as_perm.back();
    }
    for (std::size_t m = 0; m < n_; ++m) {
      for (std::size_t t = 0; t < pairings.size(); ++t) {
        const auto a = static_cast<std::size_t>(type_of(*reps[m] * as_perm[t]));
        ++counts_[(m * n_ + a) * n_ + static_cast<std::size_t>(inv_type[t])];
      }
    }
  }

  long long operator()(std::size_t m, std::size_t a, std::size_t b) const {
    return counts_[(m * n_ + a) * n_ + b];
  }

  static const SharpStructure& of(int k) {
    check_capacity(k, limits().max_pairing_k, "sharp product");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SharpStructure>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[k];
    if (!slot) slot = std::make_unique<SharpStructure>(k);
    return *slot;
  }

 private:
  std::size_t n_;
  std::vector<long long> counts_;
};

void check_class_k(int k, const char* what) { check_capacity(k, limits().max_class_k, what); }

}  // namespace

ClassFunction power_class(int k, const Rational& z) {
  check_class_k(k, "power_class");
  ClassFunction f(k);
  const auto& idx = f.index();
  for (std::size_t i = 0; i < idx.size(); ++i) f[i] = pow(z, static_cast<unsigned>(idx[i].length()));
  return f;
}

BiinvariantFunction power_coset(int k, const Rational& z) {
  check_capacity(k, limits().max_pairing_k, "power_coset");
  BiinvariantFunction f(k);
  const auto& idx = f.index();
  for (std::size_t i = 0; i < idx.size(); ++i) f[i] = pow(z, static_cast<unsigned>(idx[i].length()));
  return f;
}

ClassFunction delta_e(int k) {
  check_class_k(k, "delta_e");
  ClassFunction f(k);
  f.at(Partition::ones(k)) = 1;
  return f;
}

BiinvariantFunction one_hk(int k) {
  check_capacity(k, limits().max_pairing_k, "one_hk");
  BiinvariantFunction f(k);
  f.at(Partition::ones(k)) = 1;
  return f;
}

std::vector<Rational> fourier_coefficients(const ClassFunction& f) {
  const int k = f.k();
  check_class_k(k, "fourier_coefficients");
  const auto& chi = CharacterTable::of(k);
  const auto& idx = f.index();
  const Rational inv_order = make_rational(1, factorial(k));
  std::vector<Rational> a(idx.size());
  for (std::size_t l = 0; l < idx.size(); ++l) {
    Rational s = 0;
    for (std::size_t m = 0; m < idx.size(); ++m) {
      if (f[m] == 0) continue;
      s += Rational(class_size(idx[m])) * f[m] * static_cast<long>(chi(l, m));
    }
    a[l] = s * inv_order;
  }
  return a;
}

ClassFunction from_fourier(int k, const std::vector<Rational>& coefficients) {
  check_class_k(k, "from_fourier");
  const auto& chi = CharacterTable::of(k);
  ClassFunction f(k);
  if (coefficients.size() != f.size()) throw InvalidArgument("from_fourier: wrong coefficient count");
  for (std::size_t m = 0; m < f.size(); ++m) {
    Rational s = 0;
    for (std::size_t l = 0; l < f.size(); ++l) {
      if (coefficients[l] == 0) continue;
      s += coefficients[l] * static_cast<long>(chi(l, m));
    }
    f[m] = s;
  }
  return f;
}

ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) {
  require_same_k(f.k(), g.k(), "convolve");
  const int k = f.k();
  const auto a = fourier_coefficients(f);
  const auto b = fourier_coefficients(g);
  const auto& idx = f.index();
  const Integer order = factorial(k);
  std::vector<Rational> c(a.size());
  for (std::size_t l = 0; l < a.size(); ++l) {
    c[l] = a[l] * b[l] * make_rational(order, dimension(idx[l]));
  }
  return from_fourier(k, c);
}

BiinvariantFunction convolve_sharp(const BiinvariantFunction& f, const BiinvariantFunction& g) {
  require_same_k(f.k(), g.k(), "convolve_sharp");
  const auto& sc = SharpStructure::of(f.k());
  BiinvariantFunction h(f.k());
  const std::size_t n = f.size();
  for (std::size_t m = 0; m < n; ++m) {
    Rational s = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (f[a] == 0) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const long long c = sc(m, a, b);
        if (c == 0 || g[b] == 0) continue;
        s += f[a] * g[b] * static_cast<long>(c);
      }
    }
    h[m] = s;
  }
  return h;
}

ClassFunction wg_unitary_double(int k, const Rational& z, const Rational& w) {
  check_class_k(k, "wg_unitary");
  const auto& idx = PartitionIndex::of(k);
  std::vector<Rational> coeff(idx.size());
  const Integer order = factorial(k);
  for (std::size_t l = 0; l < idx.size(); ++l) {
    const Rational denom = c_poly(idx[l], z) * c_poly(idx[l], w);
    if (denom == 0) continue;
    coeff[l] = Rational(dimension(idx[l])) / (denom * order);
  }
  return from_fourier(k, coeff);
}

ClassFunction wg_unitary(int k, const Rational& z) {
  check_class_k(k, "wg_unitary");
  const auto& idx = PartitionIndex::of(k);
  std::vector<Rational> coeff(idx.size());
  const Integer order = factorial(k);
  for (std::size_t l = 0; l < idx.size(); ++l) {
    const Rational c = c_poly(idx[l], z);
    if (c == 0) continue;
    coeff[l] = Rational(dimension(idx[l])) / (c * order);
  }
  return from_fourier(k, coeff);
}

namespace {

template <class Denominator>
BiinvariantFunction zonal_expansion(int k, Denominator denominator) {
  const auto& zt = ZonalTable::of(k);
  const auto& idx = zt.index();
  const Rational prefactor = make_rational(factorial(k) << static_cast<mp_bitcnt_t>(k), factorial(2 * k));
  BiinvariantFunction f(k);
  for (std::size_t l = 0; l < idx.size(); ++l) {
    const Rational d = denominator(idx[l]);
    if (d == 0) continue;
    const Rational weight = prefactor * Rational(dimension(idx[l].doubled())) / d;
    for (std::size_t m = 0; m < idx.size(); ++m) f[m] += weight * zt(l, m);
  }
  for (std::size_t m = 0; m < idx.size(); ++m) f[m].canonicalize();
  return f;
}

}  // namespace

BiinvariantFunction wg_orthogonal(int k, const Rational& z) {
  return zonal_expansion(k, [&](const Partition& l) -> Rational { return c_prime_poly(l, z); });
}

BiinvariantFunction wg_orthogonal_double(int k, const Rational& z, const Rational& w) {
  return zonal_expansion(k, [&](const Partition& l) -> Rational { return c_prime_poly(l, z) * c_prime_poly(l, w); });
}

ClassFunction wg_unitary_double_by_convolution(int k, const Rational& z, const Rational& w) {
  return convolve(wg_unitary(k, z), wg_unitary(k, w));
}

BiinvariantFunction wg_orthogonal_double_by_convolution(int k, const Rational& z, const Rational& w) {
  return convolve_sharp(wg_orthogonal(k, z), wg_orthogonal(k, w));
}

bool verify_pseudo_inverse(Ensemble ensemble, int k, const Rational& z) {
  if (ensemble == Ensemble::unitary) {
    const auto p = power_class(k, z);
    const auto wg = wg_unitary(k, z);
    return convolve(convolve(p, wg), p) == p && convolve(convolve(wg, p), wg) == wg;
  }
  const auto p = power_coset(k, z);
  const auto wg = wg_orthogonal(k, z);
  return convolve_sharp(convolve_sharp(p, wg), p) == p &&
         convolve_sharp(convolve_sharp(wg, p), wg) == wg;
}

}  // namespace wgcalc
