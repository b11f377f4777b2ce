// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/moments.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "wgcalc/config.hpp"
#include "wgcalc/error.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

namespace {

// Group elements as raw one-based words, cached per k.
const std::vector<Permutation>& sym_elements(int k) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<std::vector<Permutation>>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<std::vector<Permutation>>(enumerate_sym(k));
  return *slot;
}

const std::vector<Permutation>& pairing_elements(int k) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<std::vector<Permutation>>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[k];
  if (!slot) {
    slot = std::make_unique<std::vector<Permutation>>();
    for_each_pairing(k, [&](const PairPartition& p) { slot->push_back(p.to_permutation()); });
  }
  return *slot;
}

// Classifies products a∘b by cycle type (unitary) or coset type
// (orthogonal) without allocating.
class Classifier {
 public:
  Classifier(TraceBasis basis, int k)
      : basis_(basis),
        index_(PartitionIndex::of(k)),
        points_(static_cast<std::size_t>(basis == TraceBasis::unitary ? k : 2 * k)),
        word_(points_),
        parts_(points_) {}

  int of(const std::vector<int>& w) {
    const int len = basis_ == TraceBasis::unitary ? cycle_type_into(w, parts_) : coset_type_into(w, parts_);
    return index_.index_of(std::span<const int>(parts_.data(), static_cast<std::size_t>(len)));
  }

  /// Type of a∘b.
  int of_product(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t s = 0; s < points_; ++s) word_[s] = a[static_cast<std::size_t>(b[s] - 1)];
    return of(word_);
  }

  std::size_t size() const { return index_.size(); }

 private:
  TraceBasis basis_;
  const PartitionIndex& index_;
  std::size_t points_;
  std::vector<int> word_;
  std::vector<int> parts_;
};

void check_length(const IndexSeq& s, std::size_t expected, const char* name) {
  if (s.size() != expected) {
    throw InvalidArgument(std::string("index sequence ") + name + " has length " + std::to_string(s.size()) +
                          ", expected " + std::to_string(expected));
  }
}

void check_range(const IndexSeq& s, int bound, const char* name) {
  for (int v : s) {
    if (v < 1 || v > bound) {
      throw InvalidArgument(std::string("index ") + std::to_string(v) + " in " + name + " is outside [1, " +
                            std::to_string(bound) + "]");
    }
  }
}

int even_half(const IndexSeq& s, const char* name) {
  if (s.empty() || s.size() % 2 != 0) {
    throw InvalidArgument(std::string("index sequence ") + name + " must have positive even length");
  }
  return static_cast<int>(s.size() / 2);
}

void check_unitary_sum(int k) {
  check_capacity(k, std::min(limits().max_double_sum_k, limits().max_sym_k), "unitary moment sum");
}

void check_orthogonal_sum(int k) {
  check_capacity(k, std::min(limits().max_zonal_k, limits().max_pairing_k), "orthogonal moment sum");
}

template <class T>
std::vector<T> to_scalars(const std::vector<Rational>& v) {
  std::vector<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(from_rational<T>(x));
  return out;
}

template <class T>
T sign_power(int k) {
  return (k % 2 == 0) ? T(1) : T(-1);
}

std::vector<Permutation> inverses(const std::vector<Permutation>& v) {
  std::vector<Permutation> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.inverse());
  return out;
}

// Tr_μ(A) for every partition μ of k, from power traces of A.
template <class T>
std::vector<T> trace_products(int k, std::span<const T> power) {
  const auto& idx = PartitionIndex::of(k);
  std::vector<T> out;
  out.reserve(idx.size());
  for (const auto& mu : idx.partitions()) out.push_back(trace_product<T>(mu, power));
  return out;
}

template <class T>
bool approximately_self_adjoint(const Matrix<T>& a) {
  if constexpr (std::is_same_v<T, Rational>) {
    return a.is_self_adjoint();
  } else {
    double scale = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) scale = std::max(scale, std::abs(a(i, j)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (std::abs(a(i, j) - conj_value(a(j, i))) > 1e-12 * scale) return false;
    return true;
  }
}

}  // namespace

const Rational& MomentFormula::coefficient(const Partition& mu) const {
  if (mu.weight() != order) throw InvalidArgument("MomentFormula::coefficient: weight mismatch");
  return coefficients[static_cast<std::size_t>(PartitionIndex::of(order).index_of(mu))];
}

bool MomentFormula::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

template <class T>
ScaleMatrix<T>::ScaleMatrix(Matrix<T> sigma) : sigma_(std::move(sigma)) {
  if (!sigma_.square() || sigma_.rows() == 0) throw InvalidArgument("scale matrix must be square and non-empty");
  if (!approximately_self_adjoint(sigma_)) throw DomainError("scale matrix is not Hermitian/symmetric");
  if constexpr (std::is_same_v<T, Rational>) {
    if (!is_positive_definite(sigma_)) throw DomainError("scale matrix is not positive definite");
  }
  inverse_ = sigma_.inverse();
}

template <class T>
ShapeMatrix<T>::ShapeMatrix(Matrix<T> b) : b_(std::move(b)) {
  if (!b_.square() || b_.rows() == 0) throw InvalidArgument("shape matrix must be square and non-empty");
  try {
    inverse_ = b_.inverse();
  } catch (const DomainError&) {
    throw DomainError("shape matrix B is singular");
  }
}

template class ScaleMatrix<Rational>;
template class ScaleMatrix<double>;
template class ScaleMatrix<Complex>;
template class ShapeMatrix<Rational>;
template class ShapeMatrix<double>;
template class ShapeMatrix<Complex>;

// ---------------------------------------------------------------------------

Rational haar_unitary_moment(const IndexSeq& i, const IndexSeq& j, const IndexSeq& i_prime,
                             const IndexSeq& j_prime, int n) {
  const auto k = static_cast<int>(i.size());
  if (n < 1) throw InvalidArgument("dimension n must be positive");
  check_unitary_sum(k);
  for (const auto* s : {&j, &i_prime, &j_prime}) check_length(*s, i.size(), "i/j/i'/j'");
  check_range(i, n, "i");
  check_range(j, n, "j");
  check_range(i_prime, n, "i'");
  check_range(j_prime, n, "j'");

  const auto& group = sym_elements(k);
  std::vector<Permutation> rows;
  std::vector<Permutation> cols;
  for (const auto& g : group) {
    if (delta_u(g, i, i_prime)) rows.push_back(g.inverse());
    if (delta_u(g, j, j_prime)) cols.push_back(g);
  }
  if (rows.empty() || cols.empty()) return 0;
  const auto wg = wg_unitary(k, n);
  Classifier cls(TraceBasis::unitary, k);
  Rational sum = 0;
  for (const auto& a : rows)
    for (const auto& b : cols) sum += wg[static_cast<std::size_t>(cls.of_product(a.images(), b.images()))];
  return sum;
}

Rational haar_orthogonal_moment(const IndexSeq& i, const IndexSeq& j, int n) {
  const int k = even_half(i, "i");
  if (n < 1) throw InvalidArgument("dimension n must be positive");
  check_orthogonal_sum(k);
  check_length(j, i.size(), "j");
  check_range(i, n, "i");
  check_range(j, n, "j");

  std::vector<Permutation> rows;
  std::vector<Permutation> cols;
  for (const auto& g : pairing_elements(k)) {
    if (delta_o(g, i)) rows.push_back(g.inverse());
    if (delta_o(g, j)) cols.push_back(g);
  }
  if (rows.empty() || cols.empty()) return 0;
  const auto wg = wg_orthogonal(k, n);
  Classifier cls(TraceBasis::orthogonal, k);
  Rational sum = 0;
  for (const auto& a : rows)
    for (const auto& b : cols) sum += wg[static_cast<std::size_t>(cls.of_product(a.images(), b.images()))];
  return sum;
}

MomentFormula conj_invariant_moment_u(const IndexSeq& i, const IndexSeq& j, int n) {
  const auto k = static_cast<int>(i.size());
  if (n < 1) throw InvalidArgument("dimension n must be positive");
  check_unitary_sum(k);
  check_length(j, i.size(), "j");
  check_range(i, n, "i");
  check_range(j, n, "j");

  MomentFormula f{k, TraceBasis::unitary, std::vector<Rational>(PartitionIndex::of(k).size())};
  const auto& group = sym_elements(k);
  std::vector<Permutation> active;
  for (const auto& g : group)
    if (delta_u(g, i, j)) active.push_back(g.inverse());
  if (active.empty()) return f;
  const auto wg = wg_unitary(k, n);
  Classifier cls(TraceBasis::unitary, k);
  for (const auto& tau : group) {
    Rational c = 0;
    for (const auto& a : active) c += wg[static_cast<std::size_t>(cls.of_product(a.images(), tau.images()))];
    f.coefficients[static_cast<std::size_t>(cls.of(tau.images()))] += c;
  }
  return f;
}

MomentFormula conj_invariant_moment_o(const IndexSeq& i, int n) {
  const int k = even_half(i, "i");
  if (n < 1) throw InvalidArgument("dimension n must be positive");
  check_orthogonal_sum(k);
  check_range(i, n, "i");

  MomentFormula f{k, TraceBasis::orthogonal, std::vector<Rational>(PartitionIndex::of(k).size())};
  const auto& pairings = pairing_elements(k);
  std::vector<Permutation> active;
  for (const auto& g : pairings)
    if (delta_o(g, i)) active.push_back(g.inverse());
  if (active.empty()) return f;
  const auto wg = wg_orthogonal(k, n);
  Classifier cls(TraceBasis::orthogonal, k);
  for (const auto& tau : pairings) {
    Rational c = 0;
    for (const auto& a : active) c += wg[static_cast<std::size_t>(cls.of_product(a.images(), tau.images()))];
    f.coefficients[static_cast<std::size_t>(cls.of(tau.images()))] += c;
  }
  return f;
}

MomentFormula lr_invariant_moment_u(const IndexSeq& i, const IndexSeq& j, const IndexSeq& i_prime,
                                    const IndexSeq& j_prime, int n, int p) {
  const auto k = static_cast<int>(i.size());
  if (n < 1 || p < 1) throw InvalidArgument("dimensions n, p must be positive");
  check_unitary_sum(k);
  for (const auto* s : {&j, &i_prime, &j_prime}) check_length(*s, i.size(), "i/j/i'/j'");
  check_range(i, n, "i");
  check_range(i_prime, n, "i'");
  check_range(j, p, "j");
  check_range(j_prime, p, "j'");

  MomentFormula f{k, TraceBasis::unitary, std::vector<Rational>(PartitionIndex::of(k).size())};
  const auto& group = sym_elements(k);
  std::vector<Permutation> left;
  std::vector<Permutation> right;
  for (const auto& g : group) {
    if (delta_u(g, i, i_prime)) left.push_back(g.inverse());
    if (delta_u(g, j, j_prime)) right.push_back(g);
  }
  if (left.empty() || right.empty()) return f;
  // ρ = σ1^{-1} σ2 with multiplicity.
  std::vector<Permutation> products;
  for (const auto& a : left)
    for (const auto& b : right) products.push_back(a * b);
  const auto wg = wg_unitary_double(k, n, p);
  Classifier cls(TraceBasis::unitary, k);
  for (const auto& pi : group) {
    Rational c = 0;
    for (const auto& rho : products) c += wg[static_cast<std::size_t>(cls.of_product(pi.images(), rho.images()))];
    f.coefficients[static_cast<std::size_t>(cls.of(pi.images()))] += c;
  }
  return f;
}

MomentFormula lr_invariant_moment_o(const IndexSeq& i, const IndexSeq& j, int n, int p) {
  const int k = even_half(i, "i");
  if (n < 1 || p < 1) throw InvalidArgument("dimensions n, p must be positive");
  check_orthogonal_sum(k);
  check_length(j, i.size(), "j");
  check_range(i, n, "i");
  check_range(j, p, "j");

  MomentFormula f{k, TraceBasis::orthogonal, std::vector<Rational>(PartitionIndex::of(k).size())};
  const auto& pairings = pairing_elements(k);
  std::vector<Permutation> left;
  std::vector<Permutation> right;
  for (const auto& g : pairings) {
    if (delta_o(g, i)) left.push_back(g.inverse());
    if (delta_o(g, j)) right.push_back(g);
  }
  if (left.empty() || right.empty()) return f;
  std::vector<Permutation> products;
  for (const auto& a : left)
    for (const auto& b : right) products.push_back(a * b);
  const auto wg = wg_orthogonal_double(k, n, p);
  Classifier cls(TraceBasis::orthogonal, k);
  for (const auto& pi : pairings) {
    Rational c = 0;
    for (const auto& rho : products) c += wg[static_cast<std::size_t>(cls.of_product(rho.images(), pi.images()))];
    f.coefficients[static_cast<std::size_t>(cls.of(pi.images()))] += c;
  }
  return f;
}

// ---------------------------------------------------------------------------

template <class T>
T inv_wishart_trace_u(const Permutation& pi, std::span<const T> inverse_power_traces, int n, int p) {
  const int k = pi.size();
  if (n < 1 || p < 1) throw InvalidArgument("dimensions n, p must be positive");
  check_unitary_sum(k);
  const int q = p - n;
  if (q < k) {
    throw DomainError("inverse complex Wishart moments need q = p - n >= k (q=" + std::to_string(q) +
                      ", k=" + std::to_string(k) + ")");
  }
  const auto wg = to_scalars<T>(wg_unitary(k, -q).values());
  const auto traces = trace_products<T>(k, inverse_power_traces);
  Classifier cls(TraceBasis::unitary, k);
  T sum(0);
  for (const auto& tau : sym_elements(k)) {
    const auto tau_inv = tau.inverse();
    sum += wg[static_cast<std::size_t>(cls.of_product(pi.images(), tau_inv.images()))] *
           traces[static_cast<std::size_t>(cls.of(tau.images()))];
  }
  return sign_power<T>(k) * sum;
}

template <class T>
T inv_wishart_trace_u(const Permutation& pi, const ScaleMatrix<T>& sigma, int p) {
  const auto t = power_traces(sigma.inverse(), pi.size());
  return inv_wishart_trace_u<T>(pi, std::span<const T>(t), static_cast<int>(sigma.dim()), p);
}

template <class T>
T inv_wishart_trace_o(const PairPartition& pi, std::span<const T> inverse_power_traces, int n, int p) {
  const int k = pi.k();
  if (n < 1 || p < 1) throw InvalidArgument("dimensions n, p must be positive");
  check_orthogonal_sum(k);
  const int q = p - n - 1;
  if (q < 2 * k - 1) {
    throw DomainError("inverse real Wishart moments need q = p - n - 1 >= 2k - 1 (q=" + std::to_string(q) +
                      ", k=" + std::to_string(k) + ")");
  }
  const auto wg = to_scalars<T>(wg_orthogonal(k, -q).values());
  const auto traces = trace_products<T>(k, inverse_power_traces);
  Classifier cls(TraceBasis::orthogonal, k);
  const auto pi_inv = pi.to_permutation().inverse();
  T sum(0);
  for (const auto& tau : pairing_elements(k)) {
    sum += wg[static_cast<std::size_t>(cls.of_product(pi_inv.images(), tau.images()))] *
           traces[static_cast<std::size_t>(cls.of(tau.images()))];
  }
  return sign_power<T>(k) * sum;
}

template <class T>
T inv_wishart_trace_o(const PairPartition& pi, const ScaleMatrix<T>& sigma, int p) {
  const auto t = power_traces(sigma.inverse(), pi.k());
  return inv_wishart_trace_o<T>(pi, std::span<const T>(t), static_cast<int>(sigma.dim()), p);
}

template <class T>
T ginibre_pinv_moment_c(const IndexSeq& i, const IndexSeq& j, const IndexSeq& i_prime,
                        const IndexSeq& j_prime, const ScaleMatrix<T>& sigma, int p) {
  const auto k = static_cast<int>(i.size());
  const int n = static_cast<int>(sigma.dim());
  check_unitary_sum(k);
  for (const auto* s : {&j, &i_prime, &j_prime}) check_length(*s, i.size(), "i/j/i'/j'");
  check_range(i, p, "i");
  check_range(i_prime, p, "i'");
  check_range(j, n, "j");
  check_range(j_prime, n, "j'");
  const int q = p - n;
  if (n < k) throw DomainError("Ginibre pseudo-inverse moments need n >= k");
  if (q < k) throw DomainError("Ginibre pseudo-inverse moments need q = p - n >= k");

  const auto& group = sym_elements(k);
  std::vector<Permutation> active;
  for (const auto& g : group)
    if (delta_u(g, i, i_prime)) active.push_back(g.inverse());
  if (active.empty()) return T(0);

  const auto wg = to_scalars<T>(wg_unitary_double(k, p, -q).values());
  const auto& s_inv = sigma.inverse();
  Classifier cls(TraceBasis::unitary, k);
  T sum(0);
  for (const auto& rho : group) {
    T prod(1);
    for (std::size_t s = 0; s < static_cast<std::size_t>(k); ++s) {
      const int row = j[static_cast<std::size_t>(rho.images()[s] - 1)];
      prod *= s_inv(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(j_prime[s] - 1));
    }
    if (prod == T(0)) continue;
    T weight(0);
    for (const auto& a : active) weight += wg[static_cast<std::size_t>(cls.of_product(a.images(), rho.images()))];
    sum += weight * conj_value(prod);
  }
  return sign_power<T>(k) * sum;
}

template <class T>
T ginibre_pinv_moment_r(const IndexSeq& i, const IndexSeq& j, const ScaleMatrix<T>& sigma, int p) {
  const int k = even_half(i, "i");
  const int n = static_cast<int>(sigma.dim());
  check_orthogonal_sum(k);
  check_length(j, i.size(), "j");
  check_range(i, p, "i");
  check_range(j, n, "j");
  const int q = p - n - 1;
  if (n < k) throw DomainError("Ginibre pseudo-inverse moments need n >= k");
  if (q < 2 * k - 1) throw DomainError("real Ginibre pseudo-inverse moments need q = p - n - 1 >= 2k - 1");

  const auto& pairings = pairing_elements(k);
  std::vector<Permutation> active;
  for (const auto& g : pairings)
    if (delta_o(g, i)) active.push_back(g.inverse());
  if (active.empty()) return T(0);

  const auto wg = to_scalars<T>(wg_orthogonal_double(k, p, -q).values());
  const auto& s_inv = sigma.inverse();
  Classifier cls(TraceBasis::orthogonal, k);
  T sum(0);
  for (const auto& rho : pairings) {
    T prod(1);
    const auto& w = rho.images();
    for (std::size_t s = 0; s < w.size(); s += 2) {
      prod *= s_inv(static_cast<std::size_t>(j[static_cast<std::size_t>(w[s] - 1)] - 1),
                    static_cast<std::size_t>(j[static_cast<std::size_t>(w[s + 1] - 1)] - 1));
    }
    if (prod == T(0)) continue;
    T weight(0);
    for (const auto& a : active) weight += wg[static_cast<std::size_t>(cls.of_product(a.images(), rho.images()))];
    sum += weight * prod;
  }
  return sign_power<T>(k) * sum;
}

template <class T>
T compound_wishart_inv_c(const IndexSeq& i, const IndexSeq& j, const ScaleMatrix<T>& sigma,
                         const ShapeMatrix<T>& b) {
  const auto k = static_cast<int>(i.size());
  const int n = static_cast<int>(sigma.dim());
  const int p = static_cast<int>(b.dim());
  check_unitary_sum(k);
  check_length(j, i.size(), "j");
  check_range(i, n, "i");
  check_range(j, n, "j");
  const int q = p - n;
  if (n < k) throw DomainError("inverse compound Wishart moments need n >= k");
  if (q < k) throw DomainError("inverse compound Wishart moments need q = p - n >= k");

  const auto& group = sym_elements(k);
  const auto wg = to_scalars<T>(wg_unitary_double(k, p, -q).values());
  const auto b_power = power_traces(b.inverse(), k);
  const auto b_traces = trace_products<T>(k, std::span<const T>(b_power));
  const auto& s_inv = sigma.inverse();
  const auto group_inv = inverses(group);
  Classifier cls(TraceBasis::unitary, k);
  T sum(0);
  for (const auto& rho : group) {
    T prod(1);
    for (std::size_t s = 0; s < static_cast<std::size_t>(k); ++s) {
      const int row = j[static_cast<std::size_t>(rho.images()[s] - 1)];
      prod *= s_inv(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(i[s] - 1));
    }
    if (prod == T(0)) continue;
    T weight(0);
    for (std::size_t g = 0; g < group.size(); ++g) {
      weight += b_traces[static_cast<std::size_t>(cls.of(group[g].images()))] *
                wg[static_cast<std::size_t>(cls.of_product(group_inv[g].images(), rho.images()))];
    }
    sum += weight * conj_value(prod);
  }
  return sign_power<T>(k) * sum;
}

template <class T>
T compound_wishart_inv_r(const IndexSeq& i, const ScaleMatrix<T>& sigma, const ShapeMatrix<T>& b) {
  const int k = even_half(i, "i");
  const int n = static_cast<int>(sigma.dim());
  const int p = static_cast<int>(b.dim());
  check_orthogonal_sum(k);
  check_range(i, n, "i");
  const int q = p - n - 1;
  if (n < k) throw DomainError("inverse compound Wishart moments need n >= k");
  if (q < 2 * k - 1) throw DomainError("real inverse compound Wishart moments need q = p - n - 1 >= 2k - 1");

  const auto& pairings = pairing_elements(k);
  const auto wg = to_scalars<T>(wg_orthogonal_double(k, p, -q).values());
  const auto b_power = power_traces(b.inverse(), k);
  const auto b_traces = trace_products<T>(k, std::span<const T>(b_power));
  const auto& s_inv = sigma.inverse();
  const auto pairings_inv = inverses(pairings);
  Classifier cls(TraceBasis::orthogonal, k);
  T sum(0);
  for (const auto& rho : pairings) {
    T prod(1);
    const auto& w = rho.images();
    for (std::size_t s = 0; s < w.size(); s += 2) {
      prod *= s_inv(static_cast<std::size_t>(i[static_cast<std::size_t>(w[s] - 1)] - 1),
                    static_cast<std::size_t>(i[static_cast<std::size_t>(w[s + 1] - 1)] - 1));
    }
    if (prod == T(0)) continue;
    T weight(0);
    for (std::size_t g = 0; g < pairings.size(); ++g) {
      weight += b_traces[static_cast<std::size_t>(cls.of(pairings[g].images()))] *
                wg[static_cast<std::size_t>(cls.of_product(pairings_inv[g].images(), rho.images()))];
    }
    sum += weight * prod;
  }
  return sign_power<T>(k) * sum;
}

#define WGCALC_INSTANTIATE(T)                                                                        \
  template T inv_wishart_trace_u<T>(const Permutation&, std::span<const T>, int, int);              \
  template T inv_wishart_trace_u<T>(const Permutation&, const ScaleMatrix<T>&, int);                \
  template T inv_wishart_trace_o<T>(const PairPartition&, std::span<const T>, int, int);            \
  template T inv_wishart_trace_o<T>(const PairPartition&, const ScaleMatrix<T>&, int);              \
  template T ginibre_pinv_moment_c<T>(const IndexSeq&, const IndexSeq&, const IndexSeq&,            \
                                      const IndexSeq&, const ScaleMatrix<T>&, int);                 \
  template T ginibre_pinv_moment_r<T>(const IndexSeq&, const IndexSeq&, const ScaleMatrix<T>&, int); \
  template T compound_wishart_inv_c<T>(const IndexSeq&, const IndexSeq&, const ScaleMatrix<T>&,     \
                                       const ShapeMatrix<T>&);                                      \
  template T compound_wishart_inv_r<T>(const IndexSeq&, const ScaleMatrix<T>&, const ShapeMatrix<T>&);

WGCALC_INSTANTIATE(Rational)
WGCALC_INSTANTIATE(double)
WGCALC_INSTANTIATE(Complex)

#undef WGCALC_INSTANTIATE

}  // namespace wgcalc
