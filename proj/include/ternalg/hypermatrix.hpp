#pragma once

/// Dense complex square matrices and third-order hypermatrices.
///
/// Storage is row-major with the first index slowest. C++ accessors are
/// zero-based: the entry written T_{123} in the literature is `T(0, 1, 2)`.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ternalg/scalar.hpp"

namespace ternalg {

template <std::floating_point Real>
class BasicMatrix {
public:
  using real_type = Real;
  using value_type = BasicComplex<Real>;

  explicit BasicMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw InputError("matrix dimension must be positive");
  }

  BasicMatrix(std::size_t dim, std::vector<value_type> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw InputError("matrix dimension must be positive");
    if (entries_.size() != dim * dim)
      throw InputError("matrix of dimension " + std::to_string(dim) + " needs " +
                       std::to_string(dim * dim) + " entries, got " +
                       std::to_string(entries_.size()));
  }

  static BasicMatrix identity(std::size_t dim) {
    BasicMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = value_type(1);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const value_type> entries() const noexcept { return entries_; }

  value_type& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  value_type trace() const {
    value_type s{};
    for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  BasicMatrix& operator*=(value_type s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator*(value_type s, BasicMatrix a) { return a *= s; }
  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    BasicMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        const value_type ail = a(i, l);
        for (std::size_t j = 0; j < n; ++j) c(i, j) += ail * b(l, j);
      }
    return c;
  }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

private:
  void check_same(const BasicMatrix& o) const {
    if (o.dim_ != dim_) throw InputError("matrix dimension mismatch");
  }

  std::size_t dim_;
  std::vector<value_type> entries_;
};

template <std::floating_point Real>
class BasicHypermatrix {
public:
  using real_type = Real;
  using value_type = BasicComplex<Real>;

  /// Zero hypermatrix of the given dimension.
  explicit BasicHypermatrix(std::size_t dim) : dim_(dim), entries_(dim * dim * dim) {
    if (dim == 0) throw InputError("hypermatrix dimension must be positive");
  }

  /// Takes n^3 entries in canonical order (first index slowest). Rejects
  /// length mismatches and non-finite values.
  BasicHypermatrix(std::size_t dim, std::vector<value_type> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw InputError("hypermatrix dimension must be positive");
    const std::size_t want = dim * dim * dim;
    if (entries_.size() != want)
      throw InputError("hypermatrix of dimension " + std::to_string(dim) + " needs " +
                       std::to_string(want) + " entries, got " +
                       std::to_string(entries_.size()));
    for (std::size_t i = 0; i < want; ++i)
      if (!is_finite(entries_[i]))
        throw InputError("non-finite hypermatrix entry at offset " + std::to_string(i));
  }

  template <class F>
  static BasicHypermatrix generate(std::size_t dim, F&& f) {
    BasicHypermatrix t(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) t(i, j, k) = f(i, j, k);
    return t;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const value_type> entries() const noexcept { return entries_; }

  value_type& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[(i * dim_ + j) * dim_ + k];
  }
  const value_type& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * dim_ + j) * dim_ + k];
  }

  BasicHypermatrix& operator+=(const BasicHypermatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  BasicHypermatrix& operator-=(const BasicHypermatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  BasicHypermatrix& operator*=(value_type s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend BasicHypermatrix operator+(BasicHypermatrix a, const BasicHypermatrix& b) {
    return a += b;
  }
  friend BasicHypermatrix operator-(BasicHypermatrix a, const BasicHypermatrix& b) {
    return a -= b;
  }
  friend BasicHypermatrix operator-(BasicHypermatrix a) { return a *= value_type(-1); }
  friend BasicHypermatrix operator*(value_type s, BasicHypermatrix a) { return a *= s; }
  friend BasicHypermatrix operator*(BasicHypermatrix a, value_type s) { return a *= s; }

  friend bool operator==(const BasicHypermatrix&, const BasicHypermatrix&) = default;

private:
  void check_same(const BasicHypermatrix& o) const {
    if (o.dim_ != dim_) throw InputError("hypermatrix dimension mismatch");
  }

  std::size_t dim_;
  std::vector<value_type> entries_;
};

using Matrix = BasicMatrix<double>;
using Hypermatrix = BasicHypermatrix<double>;

template <std::floating_point Real>
void require_same_dim(const BasicHypermatrix<Real>& a, const BasicHypermatrix<Real>& b) {
  if (a.dim() != b.dim())
    throw InputError("hypermatrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
}

template <std::floating_point Real>
void require_dim3(const BasicHypermatrix<Real>& t) {
  if (t.dim() != 3)
    throw InputError("operation needs a 3x3x3 hypermatrix, got dimension " +
                     std::to_string(t.dim()));
}

/// h(T, U) = sum T_ijk conj(U_ijk); linear in the first argument.
template <std::floating_point Real>
BasicComplex<Real> hermitian_inner(const BasicHypermatrix<Real>& t,
                                   const BasicHypermatrix<Real>& u) {
  require_same_dim(t, u);
  BasicComplex<Real> s{};
  auto a = t.entries();
  auto b = u.entries();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

template <std::floating_point Real>
Real norm(const BasicHypermatrix<Real>& t) {
  Real s = 0;
  for (const auto& e : t.entries()) s += std::norm(e);
  return std::sqrt(s);
}

template <std::floating_point Real>
Real distance(const BasicHypermatrix<Real>& a, const BasicHypermatrix<Real>& b) {
  require_same_dim(a, b);
  Real s = 0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(x[i] - y[i]);
  return std::sqrt(s);
}

template <std::floating_point Real>
Real max_abs_diff(const BasicHypermatrix<Real>& a, const BasicHypermatrix<Real>& b) {
  require_same_dim(a, b);
  Real m = 0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

template <std::floating_point Real>
Real max_abs(const BasicHypermatrix<Real>& a) {
  Real m = 0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

template <std::floating_point Real>
BasicHypermatrix<Real> conj(const BasicHypermatrix<Real>& t) {
  return BasicHypermatrix<Real>::generate(
      t.dim(), [&](std::size_t i, std::size_t j, std::size_t k) { return std::conj(t(i, j, k)); });
}

/// Index permutation: result(x0, x1, x2) = T(x[p0], x[p1], x[p2]).
template <std::floating_point Real>
BasicHypermatrix<Real> permute_indices(const BasicHypermatrix<Real>& t,
                                       const std::array<int, 3>& p) {
  return BasicHypermatrix<Real>::generate(t.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const std::array<std::size_t, 3> x{i, j, k};
    return t(x[p[0]], x[p[1]], x[p[2]]);
  });
}

enum class Axis { first = 1, second = 2, third = 3 };

/// Section of the cube orthogonal to `axis` at position m:
///   first:  (j, k) -> T(m, j, k)
///   second: (i, k) -> T(i, m, k)
///   third:  (r, s) -> T(r, s, m)
template <std::floating_point Real>
BasicMatrix<Real> slice(const BasicHypermatrix<Real>& t, Axis axis, std::size_t m) {
  const std::size_t n = t.dim();
  if (m >= n)
    throw InputError("slice index " + std::to_string(m) + " out of range for dimension " +
                     std::to_string(n));
  BasicMatrix<Real> s(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      switch (axis) {
        case Axis::first: s(a, b) = t(m, a, b); break;
        case Axis::second: s(a, b) = t(a, m, b); break;
        case Axis::third: s(a, b) = t(a, b, m); break;
      }
    }
  return s;
}

/// Inverse of slicing: reassembles a hypermatrix from its n sections.
template <std::floating_point Real>
BasicHypermatrix<Real> from_slices(Axis axis, std::span<const BasicMatrix<Real>> slices) {
  const std::size_t n = slices.size();
  if (n == 0) throw InputError("from_slices needs at least one slice");
  for (const auto& s : slices)
    if (s.dim() != n) throw InputError("slice dimension must equal the number of slices");
  return BasicHypermatrix<Real>::generate(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    switch (axis) {
      case Axis::first: return slices[i](j, k);
      case Axis::second: return slices[j](i, k);
      case Axis::third: break;
    }
    return slices[k](i, j);
  });
}

/// The three pairwise contractions of a 3x3x3 hypermatrix:
///   [0]_k = T_iik, [1]_j = T_iji, [2]_i = T_ijj.
template <std::floating_point Real>
std::array<std::array<BasicComplex<Real>, 3>, 3> trace_vectors(const BasicHypermatrix<Real>& t) {
  require_dim3(t);
  std::array<std::array<BasicComplex<Real>, 3>, 3> tr{};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < 3; ++i) {
      tr[0][a] += t(i, i, a);
      tr[1][a] += t(i, a, i);
      tr[2][a] += t(a, i, i);
    }
  return tr;
}

/// Largest modulus among the nine trace-vector components.
template <std::floating_point Real>
Real trace_residual(const BasicHypermatrix<Real>& t) {
  Real m = 0;
  for (const auto& v : trace_vectors(t))
    for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

/// Levi-Civita symbol: +1 on even permutations of (1,2,3), -1 on odd ones.
template <std::floating_point Real = double>
BasicHypermatrix<Real> levi_civita() {
  BasicHypermatrix<Real> e(3);
  e(0, 1, 2) = e(1, 2, 0) = e(2, 0, 1) = Real(1);
  e(2, 1, 0) = e(1, 0, 2) = e(0, 2, 1) = Real(-1);
  return e;
}

/// q-analogue of the Levi-Civita symbol. Skew in its first two indices,
/// tau_{ijk} = q tau_{jki} on even permutations and qbar tau_{jki} on odd ones,
/// normalised by tau_{312} = 1.
template <std::floating_point Real = double>
BasicHypermatrix<Real> tau() {
  const auto q = constants::q_v<Real>;
  const auto qb = constants::qbar_v<Real>;
  BasicHypermatrix<Real> t(3);
  t(0, 1, 2) = qb;
  t(1, 2, 0) = q;
  t(2, 0, 1) = Real(1);
  t(1, 0, 2) = -qb;
  t(2, 1, 0) = -q;
  t(0, 2, 1) = Real(-1);
  return t;
}

} // namespace ternalg
