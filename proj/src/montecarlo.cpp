// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>
#include <variant>

#include "wgcalc/error.hpp"
#include "wgcalc/moments.hpp"

namespace wgcalc {

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double NormalStream::uniform_open() {
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double NormalStream::real() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  const double theta = 2.0 * std::numbers::pi * uniform_open();
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

std::complex<double> NormalStream::complex() {
  const double a = real();
  const double b = real();
  return {a * std::numbers::sqrt2 / 2.0, b * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix standard_ginibre_c(int n, int p, NormalStream& rng) {
  ComplexMatrix z(n, p);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < p; ++c) z(r, c) = rng.complex();
  return z;
}

RealMatrix standard_ginibre_r(int n, int p, NormalStream& rng) {
  RealMatrix z(n, p);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < p; ++c) z(r, c) = rng.real();
  return z;
}

ComplexMatrix sample_ginibre_c(int p, const ComplexMatrix& sigma_root, NormalStream& rng) {
  return sigma_root * standard_ginibre_c(static_cast<int>(sigma_root.rows()), p, rng);
}

RealMatrix sample_ginibre_r(int p, const RealMatrix& sigma_root, NormalStream& rng) {
  return sigma_root * standard_ginibre_r(static_cast<int>(sigma_root.rows()), p, rng);
}

namespace {

template <class M>
M haar_from_qr(const M& z) {
  Eigen::HouseholderQR<M> qr(z);
  M q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (Eigen::Index c = 0; c < q.cols(); ++c) {
    const auto d = r(c, c);
    const double a = std::abs(d);
    if (a > 0) q.col(c) *= d / a;
  }
  return q;
}

template <class M>
M sqrt_impl(const M& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0) {
    throw InvalidArgument("hermitian_sqrt: matrix must be square and non-empty");
  }
  Eigen::SelfAdjointEigenSolver<M> es(sigma);
  if (es.info() != Eigen::Success) throw NumericalError("hermitian_sqrt: eigendecomposition did not converge");
  Eigen::VectorXd ev = es.eigenvalues();
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  if (ev.minCoeff() < -1e-12 * scale) {
    throw DomainError("hermitian_sqrt: matrix has a negative eigenvalue (" + std::to_string(ev.minCoeff()) + ")");
  }
  ev = ev.cwiseMax(0.0).cwiseSqrt();
  const M& v = es.eigenvectors();
  return v * ev.asDiagonal() * v.adjoint();
}

template <class M>
M inverse_checked(const M& a, double min_rcond) {
  Eigen::PartialPivLU<M> lu(a);
  const double rc = lu.rcond();
  if (!(rc >= min_rcond)) {
    throw NumericalError("matrix is numerically singular (rcond " + std::to_string(rc) + ")");
  }
  return lu.inverse();
}

template <class M>
M pinv_impl(const M& g, double min_rcond) {
  if (g.rows() <= g.cols()) return g.adjoint() * inverse_checked<M>(g * g.adjoint(), min_rcond);
  return inverse_checked<M>(g.adjoint() * g, min_rcond) * g.adjoint();
}

template <class M>
double relative(const M& residual, const M& reference) {
  const double scale = std::max(reference.cwiseAbs().maxCoeff(), 1e-300);
  return residual.cwiseAbs().maxCoeff() / scale;
}

template <class M>
double mp_residual_impl(const M& g, const M& x) {
  const M gx = g * x;
  const M xg = x * g;
  return std::max({relative<M>(gx * g - g, g), relative<M>(xg * x - x, x),
                   relative<M>(gx - gx.adjoint(), gx), relative<M>(xg - xg.adjoint(), xg)});
}

}  // namespace

ComplexMatrix sample_haar_unitary(int n, NormalStream& rng) {
  if (n < 1) throw InvalidArgument("sample_haar_unitary: n must be positive");
  return haar_from_qr<ComplexMatrix>(standard_ginibre_c(n, n, rng));
}

RealMatrix sample_haar_orthogonal(int n, NormalStream& rng) {
  if (n < 1) throw InvalidArgument("sample_haar_orthogonal: n must be positive");
  return haar_from_qr<RealMatrix>(standard_ginibre_r(n, n, rng));
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& sigma) { return sqrt_impl(sigma); }
RealMatrix hermitian_sqrt(const RealMatrix& sigma) { return sqrt_impl(sigma); }

ComplexMatrix pseudo_inverse(const ComplexMatrix& g, double min_rcond) { return pinv_impl(g, min_rcond); }
RealMatrix pseudo_inverse(const RealMatrix& g, double min_rcond) { return pinv_impl(g, min_rcond); }

double moore_penrose_residual(const ComplexMatrix& g, const ComplexMatrix& x) { return mp_residual_impl(g, x); }
double moore_penrose_residual(const RealMatrix& g, const RealMatrix& x) { return mp_residual_impl(g, x); }

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<Model, std::string_view>, 9> kModelNames{{
    {Model::haar_u, "haar-u"},
    {Model::haar_o, "haar-o"},
    {Model::ginibre_pinv_c, "ginibre-pinv-c"},
    {Model::ginibre_pinv_r, "ginibre-pinv-r"},
    {Model::inv_wishart_c, "inv-wishart-c"},
    {Model::inv_wishart_r, "inv-wishart-r"},
    {Model::compound_inv_c, "compound-inv-c"},
    {Model::compound_inv_r, "compound-inv-r"},
    {Model::conj_invariant_demo, "conj-invariant-demo"},
}};

}  // namespace

std::string_view model_name(Model m) {
  for (const auto& [model, name] : kModelNames)
    if (model == m) return name;
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (const auto& [model, n] : kModelNames)
    if (n == name) return model;
  throw InvalidArgument("unknown model '" + std::string(name) + "'");
}

bool is_real_model(Model m) {
  return m == Model::haar_o || m == Model::ginibre_pinv_r || m == Model::inv_wishart_r ||
         m == Model::compound_inv_r;
}

MatrixSpec MatrixSpec::from_rational(const RationalMatrix& m) {
  MatrixSpec s;
  s.exact = m;
  s.value = Matrix<std::complex<double>>(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.value(r, c) = to_double(m(r, c));
  return s;
}

MatrixSpec MatrixSpec::from_complex(Matrix<std::complex<double>> m) {
  MatrixSpec s;
  s.value = std::move(m);
  return s;
}

namespace {

using Cd = std::complex<double>;

bool needs_sigma(Model m) {
  return m != Model::haar_u && m != Model::haar_o && m != Model::conj_invariant_demo;
}

bool is_compound(Model m) { return m == Model::compound_inv_c || m == Model::compound_inv_r; }

// Fills in n and p from the matrices and checks that everything agrees.
ModelSpec resolve(const ModelSpec& in) {
  ModelSpec s = in;
  if (!needs_sigma(s.model) && !s.sigma.empty()) {
    throw InvalidArgument(std::string(model_name(s.model)) + " takes no scale matrix");
  }
  if (!is_compound(s.model) && !s.b.empty()) {
    throw InvalidArgument(std::string(model_name(s.model)) + " takes no shape matrix B");
  }
  if (!s.sigma.empty()) {
    if (!s.sigma.value.square()) throw InvalidArgument("scale matrix must be square");
    const auto dim = static_cast<int>(s.sigma.value.rows());
    if (s.n != 0 && s.n != dim) throw InvalidArgument("n does not match the dimension of the scale matrix");
    s.n = dim;
  }
  if (!s.b.empty()) {
    if (!s.b.value.square()) throw InvalidArgument("shape matrix must be square");
    const auto dim = static_cast<int>(s.b.value.rows());
    if (s.p != 0 && s.p != dim) throw InvalidArgument("p does not match the dimension of the shape matrix");
    s.p = dim;
  }
  if (s.n < 1) throw InvalidArgument("dimension n must be positive");
  if (s.model != Model::haar_u && s.model != Model::haar_o && s.p < 1) {
    throw InvalidArgument("dimension p must be positive");
  }
  if (is_real_model(s.model)) {
    for (const auto* m : {&s.sigma, &s.b})
      for (std::size_t r = 0; r < m->value.rows(); ++r)
        for (std::size_t c = 0; c < m->value.cols(); ++c)
          if (m->value(r, c).imag() != 0.0) {
            throw InvalidArgument(std::string(model_name(s.model)) + " needs real matrices");
          }
  }
  return s;
}

using ExactValue = std::variant<Rational, Cd>;

Matrix<Cd> identity_or(const MatrixSpec& m, int dim) {
  return m.empty() ? Matrix<Cd>::identity(static_cast<std::size_t>(dim)) : m.value;
}

// Calls f(ScaleMatrix<T>, ShapeMatrix<T>) in rational arithmetic when every
// supplied matrix is exact, otherwise in complex double.
template <class F>
ExactValue with_matrices(const ModelSpec& s, F&& f) {
  const int b_dim = is_compound(s.model) ? s.p : 1;
  const bool exact = (s.sigma.empty() || s.sigma.exact) && (s.b.empty() || s.b.exact);
  if (exact) {
    const auto sigma = s.sigma.empty() ? ScaleMatrix<Rational>::identity(static_cast<std::size_t>(s.n))
                                       : ScaleMatrix<Rational>(*s.sigma.exact);
    const auto b = s.b.empty() ? ShapeMatrix<Rational>::identity(static_cast<std::size_t>(b_dim))
                               : ShapeMatrix<Rational>(*s.b.exact);
    return ExactValue(f(sigma, b));
  }
  const ScaleMatrix<Cd> sigma(identity_or(s.sigma, s.n));
  const ShapeMatrix<Cd> b(identity_or(s.b, b_dim));
  return ExactValue(f(sigma, b));
}

ExactValue exact_resolved(const ModelSpec& s) {
  switch (s.model) {
    case Model::haar_u:
      return ExactValue(haar_unitary_moment(s.i, s.j, s.i_prime, s.j_prime, s.n));
    case Model::haar_o:
      return ExactValue(haar_orthogonal_moment(s.i, s.j, s.n));
    case Model::ginibre_pinv_c:
      return with_matrices(s, [&](const auto& sigma, const auto&) {
        using T = typename std::decay_t<decltype(sigma.matrix())>::value_type;
        return ginibre_pinv_moment_c<T>(s.i, s.j, s.i_prime, s.j_prime, sigma, s.p);
      });
    case Model::ginibre_pinv_r:
      return with_matrices(s, [&](const auto& sigma, const auto&) {
        using T = typename std::decay_t<decltype(sigma.matrix())>::value_type;
        return ginibre_pinv_moment_r<T>(s.i, s.j, sigma, s.p);
      });
    case Model::inv_wishart_c:
      return with_matrices(s, [&](const auto& sigma, const auto&) {
        using T = typename std::decay_t<decltype(sigma.matrix())>::value_type;
        return inv_wishart_trace_u<T>(Permutation(s.word), sigma, s.p);
      });
    case Model::inv_wishart_r:
      return with_matrices(s, [&](const auto& sigma, const auto&) {
        using T = typename std::decay_t<decltype(sigma.matrix())>::value_type;
        return inv_wishart_trace_o<T>(PairPartition::from_word(s.word), sigma, s.p);
      });
    case Model::compound_inv_c:
      return with_matrices(s, [&](const auto& sigma, const auto& b) {
        using T = typename std::decay_t<decltype(sigma.matrix())>::value_type;
        return compound_wishart_inv_c<T>(s.i, s.j, sigma, b);
      });
    case Model::compound_inv_r:
      return with_matrices(s, [&](const auto& sigma, const auto& b) {
        using T = typename std::decay_t<decltype(sigma.matrix())>::value_type;
        return compound_wishart_inv_r<T>(s.i, sigma, b);
      });
    case Model::conj_invariant_demo:
      conj_invariant_moment_u(s.i, s.j, s.n);  // validates the indices
      return Rational(0);
  }
  throw InvalidArgument("unknown model");
}

ComplexMatrix to_eigen(const Matrix<Cd>& m) {
  ComplexMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  return out;
}

template <class M>
auto entry_product(const M& m, const IndexSeq& rows, const IndexSeq& cols) {
  typename M::Scalar prod(1);
  for (std::size_t s = 0; s < rows.size(); ++s) prod *= m(rows[s] - 1, cols[s] - 1);
  return prod;
}

// ∏ m_{i_{2s-1} i_{2s}}.
template <class M>
auto paired_product(const M& m, const IndexSeq& i) {
  typename M::Scalar prod(1);
  for (std::size_t s = 0; s + 1 < i.size(); s += 2) prod *= m(i[s] - 1, i[s + 1] - 1);
  return prod;
}

// ∏_j Tr(A^{μ_j}).
template <class M>
typename M::Scalar trace_monomial(const M& a, const Partition& mu) {
  typename M::Scalar prod(1);
  if (mu.length() == 0) return prod;
  std::vector<typename M::Scalar> traces;
  M power = a;
  traces.push_back(power.trace());
  for (int m = 2; m <= mu[0]; ++m) {
    power = power * a;
    traces.push_back(power.trace());
  }
  for (int part : mu.parts()) prod *= traces[static_cast<std::size_t>(part - 1)];
  return prod;
}

// One draw of the sampled quantity; `resampled` counts rejected draws.
class Sampler {
 public:
  explicit Sampler(const ModelSpec& s) : s_(s) {
    if (needs_sigma(s.model)) {
      const ComplexMatrix sigma = to_eigen(identity_or(s.sigma, s.n));
      root_c_ = hermitian_sqrt(ComplexMatrix(sigma));
      if (is_real_model(s.model)) root_r_ = hermitian_sqrt(RealMatrix(sigma.real()));
    }
    if (is_compound(s.model)) {
      b_c_ = to_eigen(identity_or(s.b, s.p));
      b_r_ = b_c_.real();
    }
    if (s.model == Model::inv_wishart_c) mu_ = cycle_type(Permutation(s.word));
    if (s.model == Model::inv_wishart_r) mu_ = coset_type(PairPartition::from_word(s.word));
    if (s.model == Model::conj_invariant_demo) {
      const auto formula = conj_invariant_moment_u(s.i, s.j, s.n);
      const auto& parts = PartitionIndex::of(formula.order).partitions();
      for (std::size_t m = 0; m < parts.size(); ++m) {
        if (formula.coefficients[m] != 0) demo_terms_.emplace_back(to_double(formula.coefficients[m]), parts[m]);
      }
    }
  }

  Cd draw(NormalStream& rng, std::int64_t& resampled) const {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      try {
        return draw_once(rng);
      } catch (const NumericalError&) {
        ++resampled;
      }
    }
    throw NumericalError("1000 consecutive numerically singular draws");
  }

 private:
  Cd draw_once(NormalStream& rng) const {
    switch (s_.model) {
      case Model::haar_u: {
        const ComplexMatrix u = sample_haar_unitary(s_.n, rng);
        return entry_product(u, s_.i, s_.j) * std::conj(entry_product(u, s_.i_prime, s_.j_prime));
      }
      case Model::haar_o:
        return entry_product(sample_haar_orthogonal(s_.n, rng), s_.i, s_.j);
      case Model::ginibre_pinv_c: {
        const ComplexMatrix g = pseudo_inverse(sample_ginibre_c(s_.p, root_c_, rng));
        return entry_product(g, s_.i, s_.j) * std::conj(entry_product(g, s_.i_prime, s_.j_prime));
      }
      case Model::ginibre_pinv_r:
        return entry_product(pseudo_inverse(sample_ginibre_r(s_.p, root_r_, rng)), s_.i, s_.j);
      case Model::inv_wishart_c: {
        const ComplexMatrix g = sample_ginibre_c(s_.p, root_c_, rng);
        return trace_monomial(inverse_checked<ComplexMatrix>(g * g.adjoint(), 1e-10), mu_);
      }
      case Model::inv_wishart_r: {
        const RealMatrix g = sample_ginibre_r(s_.p, root_r_, rng);
        return trace_monomial(inverse_checked<RealMatrix>(g * g.transpose(), 1e-10), mu_);
      }
      case Model::compound_inv_c: {
        const ComplexMatrix g = sample_ginibre_c(s_.p, root_c_, rng);
        const ComplexMatrix w = g * b_c_ * g.adjoint();
        return entry_product(inverse_checked<ComplexMatrix>(w, 1e-10), s_.i, s_.j);
      }
      case Model::compound_inv_r: {
        const RealMatrix g = sample_ginibre_r(s_.p, root_r_, rng);
        const RealMatrix w = g * b_r_ * g.transpose();
        return paired_product(inverse_checked<RealMatrix>(w, 1e-10), s_.i);
      }
      case Model::conj_invariant_demo: {
        const ComplexMatrix z = standard_ginibre_c(s_.n, s_.p, rng);
        const ComplexMatrix w = z * z.adjoint();
        Cd v = entry_product(w, s_.i, s_.j);
        for (const auto& [c, mu] : demo_terms_) v -= c * trace_monomial(w, mu);
        return v;
      }
    }
    throw InvalidArgument("unknown model");
  }

  const ModelSpec& s_;
  ComplexMatrix root_c_;
  RealMatrix root_r_;
  ComplexMatrix b_c_;
  RealMatrix b_r_;
  Partition mu_;
  std::vector<std::pair<double, Partition>> demo_terms_;
};

// Running mean and sum of squared deviations per component.
struct Stats {
  std::int64_t count = 0;
  double mean_re = 0.0;
  double mean_im = 0.0;
  double m2_re = 0.0;
  double m2_im = 0.0;
  std::int64_t resampled = 0;

  void add(Cd x) {
    ++count;
    const double dr = x.real() - mean_re;
    const double di = x.imag() - mean_im;
    mean_re += dr / static_cast<double>(count);
    mean_im += di / static_cast<double>(count);
    m2_re += dr * (x.real() - mean_re);
    m2_im += di * (x.imag() - mean_im);
  }

  void merge(const Stats& o) {
    if (o.count == 0) return;
    const auto na = static_cast<double>(count);
    const auto nb = static_cast<double>(o.count);
    const double n = na + nb;
    const double dr = o.mean_re - mean_re;
    const double di = o.mean_im - mean_im;
    mean_re += dr * nb / n;
    mean_im += di * nb / n;
    m2_re += o.m2_re + dr * dr * na * nb / n;
    m2_im += o.m2_im + di * di * na * nb / n;
    count += o.count;
    resampled += o.resampled;
  }
};

}  // namespace

std::variant<Rational, std::complex<double>> exact_value(const ModelSpec& spec) {
  return exact_resolved(resolve(spec));
}

std::complex<double> exact_reference(const ModelSpec& spec) { return to_complex(exact_value(spec)); }

std::complex<double> to_complex(const std::variant<Rational, std::complex<double>>& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return {to_double(*r), 0.0};
  return std::get<std::complex<double>>(v);
}

double z_score(std::complex<double> estimate, double stderr_re, double stderr_im, std::complex<double> exact) {
  // Components that are zero up to roundoff (the imaginary part of a real
  // quantity computed in complex arithmetic) are not scored.
  const double floor =
      1e-10 * std::max({std::abs(estimate), std::abs(exact), stderr_re, stderr_im});
  auto component = [floor](double est, double se, double ref) {
    const double diff = std::abs(est - ref);
    if (se <= floor && diff <= floor) return 0.0;
    if (se > 0.0) return diff / se;
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  };
  return std::max(component(estimate.real(), stderr_re, exact.real()),
                  component(estimate.imag(), stderr_im, exact.imag()));
}

EstimatorResult estimate_moment(const ModelSpec& spec, const EstimatorOptions& options) {
  if (options.samples < 1000) throw InvalidArgument("at least 1000 samples are required");
  if (options.chunk_size < 1) throw InvalidArgument("chunk size must be positive");
  const ModelSpec s = resolve(spec);
  const Cd exact = to_complex(exact_resolved(s));
  const Sampler sampler(s);

  const std::int64_t chunk = options.chunk_size;
  const std::int64_t n_chunks = (options.samples + chunk - 1) / chunk;
  std::vector<Stats> per_chunk(static_cast<std::size_t>(n_chunks));

  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, n_chunks));

  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::int64_t c = next++; c < n_chunks; c = next++) {
        NormalStream rng(options.seed, static_cast<std::uint64_t>(c));
        Stats& st = per_chunk[static_cast<std::size_t>(c)];
        const std::int64_t end = std::min(options.samples, (c + 1) * chunk);
        for (std::int64_t t = c * chunk; t < end; ++t) st.add(sampler.draw(rng, st.resampled));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_chunks;
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Stats total;
  for (const auto& st : per_chunk) total.merge(st);

  EstimatorResult r;
  r.model = std::string(model_name(s.model));
  r.estimate = {total.mean_re, total.mean_im};
  const auto n = static_cast<double>(total.count);
  r.stderr_re = std::sqrt(total.m2_re / (n - 1.0) / n);
  r.stderr_im = std::sqrt(total.m2_im / (n - 1.0) / n);
  r.samples = total.count;
  r.seed = options.seed;
  r.chunk_size = options.chunk_size;
  r.resampled = total.resampled;
  if (total.resampled > 0) {
    std::cerr << "warning: " << total.resampled << " numerically singular draws were resampled\n";
  }
  r.exact = options.expected ? *options.expected : exact;
  r.z_score = z_score(r.estimate, r.stderr_re, r.stderr_im, *r.exact);
  return r;
}

}  // namespace wgcalc
