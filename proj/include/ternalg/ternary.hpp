#pragma once

/// The four associative ternary products of hypermatrices
///
///   P1:      (A.B.C)_ijk = A_ilm B_nlm C_njk
///   P2:      (A.B.C)_ijk = A_ilm B_nml C_njk
///   diamond: (A.B.C)_ijk = A_ijl B_nml C_mnk
///   bullet:  (A.B.C)_ijk = A_ijl B_mnl C_mnk
///
/// together with residuals for generalized associativity
/// (a.b.c).f.g = a.(f.c.b).g = a.b.(c.f.g) and for biunits.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ternalg/hypermatrix.hpp"

namespace ternalg {

enum class ProductKind { p1, p2, diamond, bullet };

inline constexpr std::array<ProductKind, 4> all_product_kinds{
    ProductKind::p1, ProductKind::p2, ProductKind::diamond, ProductKind::bullet};

constexpr std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::p1: return "P1";
    case ProductKind::p2: return "P2";
    case ProductKind::diamond: return "P3";
    case ProductKind::bullet: return "P4";
  }
  return "?";
}

/// Accepts "1", "2", "3", "4", "P1".."P4", "diamond", "bullet".
inline std::optional<ProductKind> parse_product_kind(std::string_view s) {
  if (s == "1" || s == "P1" || s == "p1") return ProductKind::p1;
  if (s == "2" || s == "P2" || s == "p2") return ProductKind::p2;
  if (s == "3" || s == "P3" || s == "p3" || s == "diamond") return ProductKind::diamond;
  if (s == "4" || s == "P4" || s == "p4" || s == "bullet") return ProductKind::bullet;
  return std::nullopt;
}

namespace detail {

// sum_ab X_ab Y_ba
template <std::floating_point Real>
BasicComplex<Real> trace_of_product(const BasicMatrix<Real>& x, const BasicMatrix<Real>& y) {
  BasicComplex<Real> s{};
  for (std::size_t a = 0; a < x.dim(); ++a)
    for (std::size_t b = 0; b < x.dim(); ++b) s += x(a, b) * y(b, a);
  return s;
}

// sum_ab X_ab Y_ab
template <std::floating_point Real>
BasicComplex<Real> pairing(const BasicMatrix<Real>& x, const BasicMatrix<Real>& y) {
  BasicComplex<Real> s{};
  for (std::size_t a = 0; a < x.dim(); ++a)
    for (std::size_t b = 0; b < x.dim(); ++b) s += x(a, b) * y(a, b);
  return s;
}

template <std::floating_point Real>
std::vector<BasicMatrix<Real>> slices(const BasicHypermatrix<Real>& t, Axis axis) {
  std::vector<BasicMatrix<Real>> out;
  out.reserve(t.dim());
  for (std::size_t m = 0; m < t.dim(); ++m) out.push_back(slice(t, axis, m));
  return out;
}

} // namespace detail

/// Auxiliary matrix of the right pair for diamond/bullet:
///   diamond: H_lk = sum B_nml C_mnk = Tr(B^(3)_l C^(3)_k)
///   bullet:  H_lk = sum B_mnl C_mnk
/// so that (A.B.C)_ijk = A_ijl H_lk. For P1/P2 this is the left Gram matrix
///   P1: G_in = sum A_ilm B_nlm,   P2: G_in = sum A_ilm B_nml
/// with (A.B.C)_ijk = G_in C_njk.
template <std::floating_point Real>
BasicMatrix<Real> pair_contraction(ProductKind kind, const BasicHypermatrix<Real>& x,
                                   const BasicHypermatrix<Real>& y) {
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  const Axis axis = (kind == ProductKind::p1 || kind == ProductKind::p2) ? Axis::first
                                                                           : Axis::third;
  const auto xs = detail::slices(x, axis);
  const auto ys = detail::slices(y, axis);
  BasicMatrix<Real> h(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const bool traced = kind == ProductKind::p2 || kind == ProductKind::diamond;
      h(a, b) = traced ? detail::trace_of_product(xs[a], ys[b]) : detail::pairing(xs[a], ys[b]);
    }
  return h;
}

/// O(n^4) product through the pair contraction above.
template <std::floating_point Real>
BasicHypermatrix<Real> ternary_product(ProductKind kind, const BasicHypermatrix<Real>& a,
                                       const BasicHypermatrix<Real>& b,
                                       const BasicHypermatrix<Real>& c) {
  require_same_dim(a, b);
  require_same_dim(a, c);
  const std::size_t n = a.dim();
  BasicHypermatrix<Real> r(n);
  if (kind == ProductKind::p1 || kind == ProductKind::p2) {
    const auto g = pair_contraction(kind, a, b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m) {
        const auto gim = g(i, m);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) r(i, j, k) += gim * c(m, j, k);
      }
  } else {
    const auto h = pair_contraction(kind, b, c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          const auto aijl = a(i, j, l);
          for (std::size_t k = 0; k < n; ++k) r(i, j, k) += aijl * h(l, k);
        }
  }
  return r;
}

/// Direct index sum over all six indices, O(n^6). Reference for tests only.
template <std::floating_point Real>
BasicHypermatrix<Real> ternary_product_reference(ProductKind kind,
                                                 const BasicHypermatrix<Real>& a,
                                                 const BasicHypermatrix<Real>& b,
                                                 const BasicHypermatrix<Real>& c) {
  require_same_dim(a, b);
  require_same_dim(a, c);
  const std::size_t n = a.dim();
  BasicHypermatrix<Real> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        BasicComplex<Real> s{};
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t m = 0; m < n; ++m)
            for (std::size_t p = 0; p < n; ++p) {
              switch (kind) {
                case ProductKind::p1: s += a(i, l, m) * b(p, l, m) * c(p, j, k); break;
                case ProductKind::p2: s += a(i, l, m) * b(p, m, l) * c(p, j, k); break;
                case ProductKind::diamond: s += a(i, j, l) * b(p, m, l) * c(m, p, k); break;
                case ProductKind::bullet: s += a(i, j, l) * b(m, p, l) * c(m, p, k); break;
              }
            }
        r(i, j, k) = s;
      }
  return r;
}

/// Which operands the middle bracket receives. `swapped` is the semiheap law
/// a.(f.c.b).g; `plain` uses a.(b.c.f).g and exists to check that tests can
/// tell the two apart.
enum class MiddleBracket { swapped, plain };

struct AssociativityResidual {
  double left_vs_middle = 0;
  double left_vs_right = 0;
  double max() const { return std::max(left_vs_middle, left_vs_right); }
};

template <std::floating_point Real>
AssociativityResidual associativity_residuals(ProductKind kind, const BasicHypermatrix<Real>& a,
                                              const BasicHypermatrix<Real>& b,
                                              const BasicHypermatrix<Real>& c,
                                              const BasicHypermatrix<Real>& f,
                                              const BasicHypermatrix<Real>& g,
                                              MiddleBracket middle = MiddleBracket::swapped) {
  auto prod = [kind](const auto& x, const auto& y, const auto& z) {
    return ternary_product(kind, x, y, z);
  };
  const auto left = prod(prod(a, b, c), f, g);
  const auto mid = middle == MiddleBracket::swapped ? prod(a, prod(f, c, b), g)
                                                    : prod(a, prod(b, c, f), g);
  const auto right = prod(a, b, prod(c, f, g));
  return {static_cast<double>(distance(left, mid)), static_cast<double>(distance(left, right))};
}

template <std::floating_point Real>
double associativity_residual(ProductKind kind, const BasicHypermatrix<Real>& a,
                              const BasicHypermatrix<Real>& b, const BasicHypermatrix<Real>& c,
                              const BasicHypermatrix<Real>& f, const BasicHypermatrix<Real>& g,
                              MiddleBracket middle = MiddleBracket::swapped) {
  return associativity_residuals(kind, a, b, c, f, g, middle).max();
}

/// Product of operand norms; every bracketing is bounded by it.
template <std::floating_point Real>
double operand_scale(const BasicHypermatrix<Real>& a, const BasicHypermatrix<Real>& b,
                     const BasicHypermatrix<Real>& c, const BasicHypermatrix<Real>& f,
                     const BasicHypermatrix<Real>& g) {
  return static_cast<double>(norm(a) * norm(b) * norm(c) * norm(f) * norm(g));
}

enum class Side { right, left };

/// right: |T.E.E - T|, left: |E.E.T - T|.
template <std::floating_point Real>
double biunit_residual(ProductKind kind, const BasicHypermatrix<Real>& e,
                       const BasicHypermatrix<Real>& t, Side side = Side::right) {
  const auto p = side == Side::right ? ternary_product(kind, t, e, e)
                                     : ternary_product(kind, e, e, t);
  return static_cast<double>(distance(p, t));
}

} // namespace ternalg
