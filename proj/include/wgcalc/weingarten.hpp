// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "wgcalc/error.hpp"
#include "wgcalc/partition.hpp"
#include "wgcalc/rational.hpp"

namespace wgcalc {

struct CycleTypeBasis {};
struct CosetTypeBasis {};

/// Exact function on S_k (resp. S_{2k}) stored by one value per cycle type
/// (resp. coset type), in partitions_of(k) order. Values are pointwise: the
/// entry for μ is f(σ) for any single σ of type μ, never a class sum.
template <class Basis>
class TypedFunction {
 public:
  TypedFunction() = default;
  explicit TypedFunction(int k)
      : k_(k), values_(PartitionIndex::of(k).size(), Rational(0)) {}
  TypedFunction(int k, std::vector<Rational> values) : k_(k), values_(std::move(values)) {
    if (values_.size() != PartitionIndex::of(k).size()) {
      throw InvalidArgument("TypedFunction: one value per partition of k required");
    }
  }

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  const PartitionIndex& index() const { return PartitionIndex::of(k_); }

  Rational& operator[](std::size_t i) { return values_[i]; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

  const Rational& at(const Partition& type) const {
    return values_[static_cast<std::size_t>(index().index_of(type))];
  }
  Rational& at(const Partition& type) {
    return values_[static_cast<std::size_t>(index().index_of(type))];
  }

  const std::vector<Rational>& values() const noexcept { return values_; }

  friend bool operator==(const TypedFunction&, const TypedFunction&) = default;

 private:
  int k_ = 0;
  std::vector<Rational> values_;
};

/// Central function on S_k, keyed by cycle type.
using ClassFunction = TypedFunction<CycleTypeBasis>;
/// H_k-biinvariant function on S_{2k}, keyed by coset type.
using BiinvariantFunction = TypedFunction<CosetTypeBasis>;

enum class Ensemble { unitary, orthogonal };

/// z^{κ(·)} on S_k.
ClassFunction power_class(int k, const Rational& z);
/// z^{κ'(·)} on S_{2k}.
BiinvariantFunction power_coset(int k, const Rational& z);
/// Dirac function at the identity of S_k.
ClassFunction delta_e(int k);
/// Indicator of H_k, the unit for ♯.
BiinvariantFunction one_hk(int k);

/// Coefficients a_λ of f = Σ_λ a_λ χ^λ, in partitions_of(k) order.
std::vector<Rational> fourier_coefficients(const ClassFunction& f);
ClassFunction from_fourier(int k, const std::vector<Rational>& coefficients);

/// Group-algebra convolution (f*g)(π) = Σ_τ f(τ) g(τ^{-1}π), evaluated in
/// the character basis where χ^λ * χ^ν = δ_{λν} (k!/f^λ) χ^λ.
ClassFunction convolve(const ClassFunction& f, const ClassFunction& g);

/// (f♯g)(σ) = Σ_{τ∈M_{2k}} f(στ) g(τ^{-1}), from the M_{2k} structure
/// constants of the ♯ algebra.
BiinvariantFunction convolve_sharp(const BiinvariantFunction& f, const BiinvariantFunction& g);

/// Wg^U(·;z) by the character expansion, skipping λ with C_λ(z) = 0.
ClassFunction wg_unitary(int k, const Rational& z);

/// Wg^O(·;z) by the zonal expansion, skipping λ with C'_λ(z) = 0.
BiinvariantFunction wg_orthogonal(int k, const Rational& z);

/// Wg^U(·;z,w) by the closed form with denominators C_λ(z)C_λ(w).
ClassFunction wg_unitary_double(int k, const Rational& z, const Rational& w);
/// Wg^O(·;z,w) by the closed form with denominators C'_λ(z)C'_λ(w).
BiinvariantFunction wg_orthogonal_double(int k, const Rational& z, const Rational& w);

/// The same functions through their definitions Wg(z) * Wg(w) and
/// Wg(z) ♯ Wg(w).
ClassFunction wg_unitary_double_by_convolution(int k, const Rational& z, const Rational& w);
BiinvariantFunction wg_orthogonal_double_by_convolution(int k, const Rational& z, const Rational& w);

/// Checks both pseudo-inverse identities
///   P * Wg * P = P   and   Wg * P * Wg = Wg
/// with P = z^{κ} (unitary, product *) or z^{κ'} (orthogonal, product ♯).
bool verify_pseudo_inverse(Ensemble ensemble, int k, const Rational& z);

}  // namespace wgcalc
