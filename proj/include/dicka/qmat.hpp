// Copyright 2026 The dicka Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small dense complex linear algebra and entropic quantities for systems of
// total dimension up to ~64. Entropies are in bits.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dicka::qmat {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kEigenClamp = 1e-12;
inline constexpr double kJacobiTol = 1e-12;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  /// |v><v| for a column vector v.
  static ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// max |M - M^dagger| entrywise.
  double hermiticity_error() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double err = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r; c < cols_; ++c)
        err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return err;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: product shape mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  /// Largest entrywise modulus of the difference.
  friend double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.check_same_shape(b);
    double d = 0.0;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      d = std::max(d, std::abs(a.entries_[i] - b.entries_[i]));
    return d;
  }

 private:
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("ComplexMatrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Namespace-scope declaration so qualified qmat::max_abs_diff resolves.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a (x) b.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot a_pq with
/// diag(1, e^{-i phi}) and then applies the real symmetric Jacobi rotation.
/// Sweeps stop once the off-diagonal Frobenius mass drops below 1e-12.
inline EigenSystem eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eig_hermitian: matrix is not square");
  if (m.hermiticity_error() > kHermitianTol)
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");

  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * std::norm(a(p, q));
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_mass() >= kJacobiTol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g < 1e-300) continue;
        const Complex phase = a(p, q) / g;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] acting on (p, q).
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^dagger A
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // V <- V J
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

/// -sum p log2 p over the given weights, treating values below the clamp as 0.
inline double entropy_of_spectrum(std::span<const double> spectrum, double clamp = kEigenClamp) {
  double h = 0.0;
  for (double p : spectrum)
    if (p > clamp) h -= p * std::log2(p);
  return h;
}

/// Hermitian, unit-trace, positive semidefinite matrix on a labelled tensor
/// factorisation. Validated once at construction.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<std::size_t> dims, ComplexMatrix matrix)
      : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (dims_.empty()) throw std::invalid_argument("DensityMatrix: no subsystems");
    for (auto d : dims_)
      if (d < 1) throw std::invalid_argument("DensityMatrix: subsystem dimension must be positive");
    const std::size_t total = dimension();
    if (matrix_.rows() != total || matrix_.cols() != total)
      throw std::invalid_argument("DensityMatrix: matrix size does not match subsystem dimensions");
    if (matrix_.hermiticity_error() > kHermitianTol)
      throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > kTraceTol)
      throw std::invalid_argument("DensityMatrix: trace is not 1");
    spectrum_ = eig_hermitian(matrix_).values;
    if (spectrum_.back() < -kPositivityTol)
      throw std::invalid_argument("DensityMatrix: matrix has a negative eigenvalue");
  }

  /// Single-system state.
  explicit DensityMatrix(ComplexMatrix matrix)
      : DensityMatrix(std::vector<std::size_t>{matrix.rows()}, std::move(matrix)) {}

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t subsystems() const noexcept { return dims_.size(); }
  std::size_t dimension() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
  }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  /// Eigenvalues, descending.
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }

  Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  double purity() const { return (matrix_ * matrix_).trace().real(); }

 private:
  std::vector<std::size_t> dims_;
  ComplexMatrix matrix_;
  std::vector<double> spectrum_;
};

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(std::move(dims), tensor(a.matrix(), b.matrix()));
}

/// Convex combination sum_k w_k rho_k; all states must share dims.
inline DensityMatrix mixture(std::span<const std::pair<double, DensityMatrix>> terms) {
  if (terms.empty()) throw std::invalid_argument("mixture: no terms");
  const auto& dims = terms.front().second.dims();
  ComplexMatrix m(terms.front().second.dimension(), terms.front().second.dimension());
  for (const auto& [w, rho] : terms) {
    if (rho.dims() != dims) throw std::invalid_argument("mixture: dimension mismatch");
    m += w * rho.matrix();
  }
  return DensityMatrix(dims, std::move(m));
}

inline DensityMatrix maximally_mixed(std::vector<std::size_t> dims) {
  const std::size_t n =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  return DensityMatrix(std::move(dims), ComplexMatrix::identity(n) * Complex(1.0 / double(n)));
}

inline DensityMatrix pure_state(std::vector<std::size_t> dims, std::span<const Complex> amplitudes) {
  return DensityMatrix(std::move(dims), ComplexMatrix::outer(amplitudes));
}

/// Computational basis projector |index><index| on the given factorisation.
inline DensityMatrix basis_state(std::vector<std::size_t> dims, std::size_t index) {
  const std::size_t n =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (index >= n) throw std::out_of_range("basis_state: index out of range");
  ComplexMatrix m(n, n);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(dims), std::move(m));
}

namespace detail {

/// Row-major strides for a mixed-radix index over dims.
inline std::vector<std::size_t> strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

}  // namespace detail

/// Reduced state on `keep` (subsystem indices); the kept factors stay in
/// their original order regardless of the order given.
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.back() >= rho.subsystems()) throw std::out_of_range("partial_trace: subsystem index out of range");

  const auto& dims = rho.dims();
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);

  std::vector<std::size_t> kept_dims, traced_dims;
  for (auto i : kept) kept_dims.push_back(dims[i]);
  for (auto i : traced) traced_dims.push_back(dims[i]);
  const auto full_strides = detail::strides(dims);

  auto offset = [&](const std::vector<std::size_t>& which, const std::vector<std::size_t>& wdims,
                    std::size_t flat) {
    std::size_t off = 0;
    for (std::size_t k = which.size(); k-- > 0;) {
      off += (flat % wdims[k]) * full_strides[which[k]];
      flat /= wdims[k];
    }
    return off;
  };

  const std::size_t nk = std::accumulate(kept_dims.begin(), kept_dims.end(), std::size_t{1}, std::multiplies<>());
  const std::size_t nt = std::accumulate(traced_dims.begin(), traced_dims.end(), std::size_t{1}, std::multiplies<>());
  std::vector<std::size_t> kept_off(nk), traced_off(nt);
  for (std::size_t i = 0; i < nk; ++i) kept_off[i] = offset(kept, kept_dims, i);
  for (std::size_t t = 0; t < nt; ++t) traced_off[t] = offset(traced, traced_dims, t);

  ComplexMatrix out(nk, nk);
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = 0; j < nk; ++j) {
      Complex s{0.0, 0.0};
      for (std::size_t t = 0; t < nt; ++t) s += m(kept_off[i] + traced_off[t], kept_off[j] + traced_off[t]);
      out(i, j) = s;
    }
  return DensityMatrix(std::move(kept_dims), std::move(out));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// Von Neumann entropy in bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  return std::max(0.0, entropy_of_spectrum(rho.spectrum()));
}

/// Entropy of the marginal on `subsystems`; the empty set has entropy 0.
inline double marginal_entropy(const DensityMatrix& rho, std::span<const std::size_t> subsystems) {
  if (subsystems.empty()) return 0.0;
  if (subsystems.size() == rho.subsystems()) {
    std::vector<std::size_t> s(subsystems.begin(), subsystems.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) == s.end() && s.back() == rho.subsystems() - 1)
      return von_neumann_entropy(rho);
  }
  return von_neumann_entropy(partial_trace(rho, subsystems));
}

/// Assignment of subsystems to parties A_1..A_N and the conditioning system E.
struct Grouping {
  std::vector<std::vector<std::size_t>> parties;
  std::vector<std::size_t> eve;  // may be empty
};

namespace detail {

inline std::vector<std::size_t> join(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::vector<std::size_t> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline void check_grouping(const Grouping& g, std::size_t subsystems) {
  if (g.parties.empty()) throw std::invalid_argument("quantum_cmi: no parties");
  std::vector<int> seen(subsystems, 0);
  auto mark = [&](std::size_t i) {
    if (i >= subsystems) throw std::invalid_argument("quantum_cmi: subsystem index out of range");
    if (seen[i]++) throw std::invalid_argument("quantum_cmi: groups overlap");
  };
  for (const auto& p : g.parties) {
    if (p.empty()) throw std::invalid_argument("quantum_cmi: empty party group");
    for (auto i : p) mark(i);
  }
  for (auto i : g.eve) mark(i);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("quantum_cmi: groups do not cover all subsystems");
}

}  // namespace detail

/// Conditional entropy H(X|E) = H(XE) - H(E).
inline double conditional_entropy(const DensityMatrix& rho, std::span<const std::size_t> x,
                                  std::span<const std::size_t> e) {
  return marginal_entropy(rho, detail::join(x, e)) - marginal_entropy(rho, e);
}

/// I(X:Y|Z) = H(XZ) + H(YZ) - H(Z) - H(XYZ).
inline double conditional_mutual_information(const DensityMatrix& rho, std::span<const std::size_t> x,
                                             std::span<const std::size_t> y, std::span<const std::size_t> z) {
  const auto xz = detail::join(x, z);
  const auto yz = detail::join(y, z);
  const auto xyz = detail::join(x, yz);
  return marginal_entropy(rho, xz) + marginal_entropy(rho, yz) - marginal_entropy(rho, z) -
         marginal_entropy(rho, xyz);
}

/// Multipartite conditional mutual information
/// I(A_1:...:A_N|E) = sum_i H(A_i|E) - H(A_1...A_N|E).
inline double quantum_cmi(const DensityMatrix& rho, const Grouping& groups) {
  detail::check_grouping(groups, rho.subsystems());
  double total = 0.0;
  std::vector<std::size_t> all;
  for (const auto& p : groups.parties) {
    total += conditional_entropy(rho, p, groups.eve);
    all.insert(all.end(), p.begin(), p.end());
  }
  return total - conditional_entropy(rho, all, groups.eve);
}

/// D(rho||sigma) in bits; +infinity when rho has weight on the kernel of sigma.
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dims() != sigma.dims()) throw std::invalid_argument("relative_entropy: dimension mismatch");
  const auto es = eig_hermitian(sigma.matrix());
  const auto& rm = rho.matrix();
  const std::size_t n = rho.dimension();
  double cross = 0.0;
  double kernel_weight = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    // <w_j| rho |w_j>
    Complex ex{0.0, 0.0};
    for (std::size_t r = 0; r < n; ++r) {
      Complex row{0.0, 0.0};
      for (std::size_t c = 0; c < n; ++c) row += rm(r, c) * es.vectors(c, j);
      ex += std::conj(es.vectors(r, j)) * row;
    }
    const double weight = std::max(0.0, ex.real());
    if (es.values[j] > kEigenClamp) {
      cross += weight * std::log2(es.values[j]);
    } else {
      kernel_weight += weight;
    }
  }
  if (kernel_weight > 1e-10) return std::numeric_limits<double>::infinity();
  const double neg_entropy = -entropy_of_spectrum(rho.spectrum());
  return std::max(0.0, neg_entropy - cross);
}

/// Pure state on dims + [rank(rho)] whose reduction to the original
/// factors is rho.
inline DensityMatrix purify(const DensityMatrix& rho) {
  const auto es = eig_hermitian(rho.matrix());
  const std::size_t n = rho.dimension();
  std::size_t rank = 0;
  double kept = 0.0;
  for (double v : es.values)
    if (v > kEigenClamp) {
      ++rank;
      kept += v;
    }
  rank = std::max<std::size_t>(rank, 1);
  std::vector<Complex> psi(n * rank, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < rank; ++k) {
    const double amp = std::sqrt(std::max(0.0, es.values[k]) / kept);
    for (std::size_t r = 0; r < n; ++r) psi[r * rank + k] = amp * es.vectors(r, k);
  }
  auto dims = rho.dims();
  dims.push_back(rank);
  return pure_state(std::move(dims), psi);
}

/// Positive operator-valued measure on a single subsystem.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
    if (effects_.empty()) throw std::invalid_argument("Povm: no effects");
    dim_ = effects_.front().rows();
    ComplexMatrix sum(dim_, dim_);
    for (const auto& e : effects_) {
      if (e.rows() != dim_ || e.cols() != dim_) throw std::invalid_argument("Povm: effect size mismatch");
      if (e.hermiticity_error() > kHermitianTol) throw std::invalid_argument("Povm: effect is not Hermitian");
      if (eig_hermitian(e).values.back() < -kHermitianTol)
        throw std::invalid_argument("Povm: effect is not positive semidefinite");
      sum += e;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(dim_)) > kHermitianTol)
      throw std::invalid_argument("Povm: effects do not sum to identity");
  }

  /// Two-outcome projective measurement of a +-1 valued observable;
  /// outcome 0 is the +1 eigenspace.
  static Povm from_observable(const ComplexMatrix& observable) {
    const auto id = ComplexMatrix::identity(observable.rows());
    if (max_abs_diff(observable * observable, id) > 1e-9)
      throw std::invalid_argument("Povm: observable does not square to identity");
    return Povm({0.5 * (id + observable), 0.5 * (id - observable)});
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t outcomes() const noexcept { return effects_.size(); }
  const ComplexMatrix& effect(std::size_t k) const { return effects_.at(k); }

 private:
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> effects_;
};

namespace pauli {

inline ComplexMatrix x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
inline ComplexMatrix y() { return ComplexMatrix(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
inline ComplexMatrix z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace pauli

}  // namespace dicka::qmat
