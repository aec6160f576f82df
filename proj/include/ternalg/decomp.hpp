#pragma once

/// Irreducible pieces of a 3x3x3 hypermatrix under SO(3).
///
/// T = t0 + t1 + t2 + t3 with
///   t0 = lambda * eps                          (dim 1)
///   t1 = d_ij A_k + d_ik B_j + d_jk C_i        (dim 9)
///   t2 traceless with zero cyclic sum          (dim 10)
///   t3 traceless and totally symmetric         (dim 7)
/// and t2 further splits into the two eigenspaces q, qbar of the cyclic
/// index shift. Also the permutation-sum and cyclic-sum residuals that
/// characterise the two solution families of the ternary exclusion law.

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "ternalg/hypermatrix.hpp"

namespace ternalg {

/// (L T)_{i1 i2 i3} = T_{i2 i3 i1}. L^3 = Id.
template <std::floating_point Real>
BasicHypermatrix<Real> substitute(const BasicHypermatrix<Real>& t) {
  require_dim3(t);
  return permute_indices(t, {1, 2, 0});
}

enum class CyclicEigenvalue { one, q, qbar };

/// Spectral projector of L:
///   xi_1    = (Id + L + L^2) / 3
///   xi_q    = (Id + qbar L + q L^2) / 3
///   xi_qbar = (Id + q L + qbar L^2) / 3
template <std::floating_point Real>
BasicHypermatrix<Real> xi_project(const BasicHypermatrix<Real>& t, CyclicEigenvalue eig) {
  const auto l1 = substitute(t);
  const auto l2 = substitute(l1);
  BasicComplex<Real> c1(1), c2(1);
  if (eig == CyclicEigenvalue::q) {
    c1 = constants::qbar_v<Real>;
    c2 = constants::q_v<Real>;
  } else if (eig == CyclicEigenvalue::qbar) {
    c1 = constants::q_v<Real>;
    c2 = constants::qbar_v<Real>;
  }
  const Real third = Real(1) / Real(3);
  return BasicHypermatrix<Real>::generate(3, [&](std::size_t i, std::size_t j, std::size_t k) {
    return third * (t(i, j, k) + c1 * l1(i, j, k) + c2 * l2(i, j, k));
  });
}

template <std::floating_point Real>
struct BasicCyclicParts {
  BasicHypermatrix<Real> fixed, eig_q, eig_qbar;
};
using CyclicParts = BasicCyclicParts<double>;

template <std::floating_point Real>
BasicCyclicParts<Real> cyclic_parts(const BasicHypermatrix<Real>& t) {
  return {xi_project(t, CyclicEigenvalue::one), xi_project(t, CyclicEigenvalue::q),
          xi_project(t, CyclicEigenvalue::qbar)};
}

template <std::floating_point Real>
using Vec3 = std::array<BasicComplex<Real>, 3>;

/// d_ij A_k + d_ik B_j + d_jk C_i
template <std::floating_point Real>
BasicHypermatrix<Real> delta_form(const Vec3<Real>& a, const Vec3<Real>& b, const Vec3<Real>& c) {
  BasicHypermatrix<Real> t(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < 3; ++x) {
      t(i, i, x) += a[x];
      t(i, x, i) += b[x];
      t(x, i, i) += c[x];
    }
  return t;
}

/// Vectors (A, B, C) of the delta form whose traces match those of T.
/// The trace system has matrix 2I + J, inverse (I - J/5)/2.
template <std::floating_point Real>
std::array<Vec3<Real>, 3> delta_vectors(const BasicHypermatrix<Real>& t) {
  const auto tr = trace_vectors(t);
  std::array<Vec3<Real>, 3> out{};
  for (std::size_t x = 0; x < 3; ++x) {
    const auto fifth = (tr[0][x] + tr[1][x] + tr[2][x]) / Real(5);
    for (std::size_t v = 0; v < 3; ++v) out[v][x] = (tr[v][x] - fifth) / Real(2);
  }
  return out;
}

template <std::floating_point Real>
struct BasicWeightParts {
  BasicHypermatrix<Real> t0, t1, t2, t3;
  BasicComplex<Real> lambda{};       // t0 = lambda * eps
  std::array<Vec3<Real>, 3> delta{};  // A, B, C of t1

  const BasicHypermatrix<Real>& part(int w) const {
    switch (w) {
      case 0: return t0;
      case 1: return t1;
      case 2: return t2;
      default: return t3;
    }
  }
};
using WeightParts = BasicWeightParts<double>;

template <std::floating_point Real>
BasicWeightParts<Real> weight_decompose(const BasicHypermatrix<Real>& t) {
  require_dim3(t);
  const auto d = delta_vectors(t);
  auto t1 = delta_form(d[0], d[1], d[2]);
  const auto traceless = t - t1;
  const auto eps = levi_civita<Real>();
  const auto lambda = hermitian_inner(traceless, eps) / Real(6);
  auto t0 = lambda * eps;
  const auto cyclic = xi_project(traceless, CyclicEigenvalue::one);
  auto t2 = traceless - cyclic;
  auto t3 = cyclic - t0;
  return {std::move(t0), std::move(t1), std::move(t2), std::move(t3), lambda, d};
}

/// Entrywise residual of membership in the weight-w subspace; 0 for members.
template <std::floating_point Real>
Real weight_membership_residual(const BasicHypermatrix<Real>& t, int w) {
  require_dim3(t);
  switch (w) {
    case 0: {
      const auto eps = levi_civita<Real>();
      return max_abs_diff(t, (hermitian_inner(t, eps) / Real(6)) * eps);
    }
    case 1: {
      const auto d = delta_vectors(t);
      return max_abs_diff(t, delta_form(d[0], d[1], d[2]));
    }
    case 2:
      return std::max(trace_residual(t), max_abs(xi_project(t, CyclicEigenvalue::one)));
    case 3:
      return std::max({trace_residual(t), max_abs_diff(t, permute_indices(t, {1, 0, 2})),
                       max_abs_diff(t, permute_indices(t, {0, 2, 1}))});
    default: break;
  }
  throw InputError("weight must be 0, 1, 2 or 3");
}

/// Residual of T_ijk = c * T_jki together with tracelessness.
template <std::floating_point Real>
Real cyclic_law_residual(const BasicHypermatrix<Real>& t, BasicComplex<Real> c) {
  Real m = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) m = std::max(m, std::abs(t(i, j, k) - c * t(j, k, i)));
  return std::max(m, trace_residual(t));
}

/// Split of a weight-2 hypermatrix into (xi_q T2, xi_qbar T2). The first
/// part obeys T_ijk = qbar T_jki, the second T_ijk = q T_jki.
/// Throws InputError when T2 is not in the weight-2 subspace to rel_tol * |T2|.
template <std::floating_point Real>
std::pair<BasicHypermatrix<Real>, BasicHypermatrix<Real>> cyclic_split_weight2(
    const BasicHypermatrix<Real>& t2, double rel_tol = 1e-10) {
  const Real r = weight_membership_residual(t2, 2);
  if (r > rel_tol * norm(t2))
    throw InputError("input is not in the weight-2 subspace (residual " + std::to_string(r) + ")");
  return {xi_project(t2, CyclicEigenvalue::q), xi_project(t2, CyclicEigenvalue::qbar)};
}

enum class ExclusionClass { skew, q_cyclic, qbar_cyclic, cyclic_sum_only, none };

constexpr std::string_view to_string(ExclusionClass c) {
  switch (c) {
    case ExclusionClass::skew: return "skew";
    case ExclusionClass::q_cyclic: return "q_cyclic";
    case ExclusionClass::qbar_cyclic: return "qbar_cyclic";
    case ExclusionClass::cyclic_sum_only: return "cyclic_sum_only";
    case ExclusionClass::none: break;
  }
  return "none";
}

struct ExclusionReport {
  double perm_sum_residual = 0;    // max |sum of T over the 6 orderings of (i,j,k)|
  double cyclic_sum_residual = 0;  // max |T_ijk + T_jki + T_kij|
  std::array<double, 3> trace_residuals{};  // max |T_iik|, |T_iji|, |T_ijj|
  ExclusionClass classification = ExclusionClass::none;
};

/// Residuals are for T as given. The classification uses T / |T| against
/// `tol`; the zero hypermatrix classifies as skew.
inline ExclusionReport exclusion_residuals(const Hypermatrix& t, double tol = 1e-10) {
  require_dim3(t);
  ExclusionReport rep;
  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const std::array<std::size_t, 3> v{i, j, k};
        Complex all{}, cyc{};
        for (std::size_t p = 0; p < 6; ++p) {
          const auto x = t(v[perms[p][0]], v[perms[p][1]], v[perms[p][2]]);
          all += x;
          if (p < 3) cyc += x;
        }
        rep.perm_sum_residual = std::max(rep.perm_sum_residual, std::abs(all));
        rep.cyclic_sum_residual = std::max(rep.cyclic_sum_residual, std::abs(cyc));
      }
  const auto tr = trace_vectors(t);
  for (std::size_t v = 0; v < 3; ++v)
    for (const auto& c : tr[v]) rep.trace_residuals[v] = std::max(rep.trace_residuals[v], std::abs(c));

  const double n = norm(t);
  if (n == 0) {
    rep.classification = ExclusionClass::skew;
    return rep;
  }
  const Hypermatrix u = (1.0 / n) * t;
  const double skew = std::max(max_abs(u + permute_indices(u, {1, 0, 2})),
                               max_abs(u + permute_indices(u, {0, 2, 1})));
  if (skew <= tol)
    rep.classification = ExclusionClass::skew;
  else if (cyclic_law_residual(u, constants::q) <= tol)
    rep.classification = ExclusionClass::q_cyclic;
  else if (cyclic_law_residual(u, constants::qbar) <= tol)
    rep.classification = ExclusionClass::qbar_cyclic;
  else if (rep.cyclic_sum_residual / n <= tol)
    rep.classification = ExclusionClass::cyclic_sum_only;
  return rep;
}

} // namespace ternalg
