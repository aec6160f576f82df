#pragma once

/// The five-dimensional space of traceless q-cyclic hypermatrices
/// (T_ijk = q T_jki, all traces zero): orthonormal basis E1..E5, coordinates,
/// the quadratic form K with K(z, z) = I2, the auxiliary matrix H of the
/// diamond product, and right biunits built from I2-regular elements.

#include <array>
#include <cmath>
#include <string>

#include "ternalg/decomp.hpp"
#include "ternalg/hypermatrix.hpp"
#include "ternalg/linalg.hpp"
#include "ternalg/rotation.hpp"
#include "ternalg/ternary.hpp"

namespace ternalg {

using Coords5 = std::array<Complex, 5>;

class NotRegularError : public InputError {
public:
  using InputError::InputError;
};

namespace detail {

struct BasisEntry {
  int slice, row, col;
  int phase;  // 0: 1, 1: q, 2: qbar
  int sign;
};

inline Hypermatrix basis_element(std::initializer_list<BasisEntry> entries, double scale) {
  Hypermatrix e(3);
  for (const auto& x : entries) {
    const Complex ph = x.phase == 0 ? Complex(1) : x.phase == 1 ? constants::q : constants::qbar;
    e(x.slice, x.row, x.col) = (x.sign * scale) * ph;
  }
  return e;
}

} // namespace detail

/// E1..E5. Entries are listed slice by slice along the first index.
inline const std::array<Hypermatrix, 5>& basis() {
  static const std::array<Hypermatrix, 5> b = [] {
    const double s6 = 1.0 / std::sqrt(6.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    using detail::basis_element;
    return std::array<Hypermatrix, 5>{
        basis_element({{0, 1, 1, 0, 1}, {0, 2, 2, 0, -1},
                       {1, 0, 1, 1, 1}, {1, 1, 0, 2, 1},
                       {2, 0, 2, 1, -1}, {2, 2, 0, 2, -1}}, s6),
        basis_element({{0, 0, 1, 2, -1}, {0, 1, 0, 1, -1},
                       {1, 0, 0, 0, -1}, {1, 2, 2, 0, 1},
                       {2, 1, 2, 1, 1}, {2, 2, 1, 2, 1}}, s6),
        basis_element({{0, 0, 2, 2, 1}, {0, 2, 0, 1, 1},
                       {1, 1, 2, 2, -1}, {1, 2, 1, 1, -1},
                       {2, 0, 0, 0, 1}, {2, 1, 1, 0, -1}}, s6),
        basis_element({{0, 1, 2, 0, 1}, {1, 2, 0, 2, 1}, {2, 0, 1, 1, 1}}, s3),
        basis_element({{0, 2, 1, 1, 1}, {1, 0, 2, 2, 1}, {2, 1, 0, 0, 1}}, s3),
    };
  }();
  return b;
}

/// max(|T_ijk - q T_jki|, traces). Zero exactly on the q-cyclic traceless space.
inline double qcyclic_residual(const Hypermatrix& t) {
  return cyclic_law_residual(t, constants::q);
}

/// Throws InputError if T is not traceless q-cyclic to rel_tol * |T|,
/// naming the condition that failed.
inline void require_qcyclic(const Hypermatrix& t, double rel_tol = 1e-10) {
  require_dim3(t);
  const double scale = rel_tol * norm(t);
  const double tr = trace_residual(t);
  if (tr > scale)
    throw InputError("not a traceless q-cyclic hypermatrix: trace residual " + std::to_string(tr));
  const double cyc = qcyclic_residual(t);
  if (cyc > scale)
    throw InputError("not a traceless q-cyclic hypermatrix: cyclic-law residual T_ijk - q T_jki = " +
                     std::to_string(cyc));
}

inline Hypermatrix from_coords(const Coords5& z) {
  Hypermatrix t(3);
  for (std::size_t a = 0; a < 5; ++a) t += z[a] * basis()[a];
  return t;
}

/// z_A = h(T, E_A) for a traceless q-cyclic T.
inline Coords5 to_coords(const Hypermatrix& t, double rel_tol = 1e-10) {
  require_qcyclic(t, rel_tol);
  Coords5 z{};
  for (std::size_t a = 0; a < 5; ++a) z[a] = hermitian_inner(t, basis()[a]);
  return z;
}

/// K(u, v) = u1 v1 + u2 v2 + u3 v3 + q (u4 v5 + u5 v4)
inline Complex k_form(const Coords5& u, const Coords5& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + constants::q * (u[3] * v[4] + u[4] * v[3]);
}

using KMatrix = std::array<std::array<Complex, 5>, 5>;

/// K_AB = K(e_A, e_B).
inline KMatrix k_matrix() {
  KMatrix k{};
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      Coords5 ea{}, eb{};
      ea[a] = 1;
      eb[b] = 1;
      k[a][b] = k_form(ea, eb);
    }
  return k;
}

struct KMatrixProperties {
  bool symmetric = false;         // exact
  double unitary_residual = 0;    // max |K conj(K)^T - I|
  double det_residual = 0;        // |det K - exp(i pi/3)|
  double sixth_power_residual = 0;  // max |K^6 - I|
  double eigenvalue_residual = 0;   // multiset distance to {1, 1, 1, q, -q}
};

inline KMatrixProperties k_matrix_properties(const KMatrix& k) {
  linalg::MatrixXc m(5, 5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) m(a, b) = k[a][b];
  KMatrixProperties p;
  p.symmetric = true;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) p.symmetric = p.symmetric && k[a][b] == k[b][a];
  const linalg::MatrixXc id = linalg::MatrixXc::Identity(5, 5);
  p.unitary_residual = (m * m.adjoint() - id).cwiseAbs().maxCoeff();
  p.det_residual = std::abs(m.determinant() - constants::eps6);
  linalg::MatrixXc m6 = id;
  for (int i = 0; i < 6; ++i) m6 = m6 * m;
  p.sixth_power_residual = (m6 - id).cwiseAbs().maxCoeff();
  p.eigenvalue_residual = linalg::multiset_distance(
      linalg::eigenvalues(m), {1.0, 1.0, 1.0, constants::q, -constants::q});
  return p;
}

/// Residual of each identity satisfied by the invariants of a traceless
/// q-cyclic T with coordinates z.
struct RestrictedInvariantResiduals {
  double i1 = 0;        // I1 = 0
  double i1_star = 0;   // I1* = sum |z_A|^2
  double i2 = 0;        // I2 = K(z, z)
  double i2_star = 0;   // I2* = 0
  double i3 = 0;        // I3 = q I2
  double i3_star = 0;   // I3* = 0
  double i4 = 0;        // I4 = qbar I2
  double i4_star = 0;   // I4* = 0
  double i5 = 0;        // I5 = 0
  double i5_star = 0;   // I5* = -I1*
  double trace_invariants = 0;  // I6..I11 and stars = 0

  double max() const {
    return std::max({i1, i1_star, i2, i2_star, i3, i3_star, i4, i4_star, i5, i5_star,
                     trace_invariants});
  }
};

inline RestrictedInvariantResiduals restricted_invariants_check(const Hypermatrix& t,
                                                                double rel_tol = 1e-10) {
  const Coords5 z = to_coords(t, rel_tol);
  const auto inv = invariants(t);
  RestrictedInvariantResiduals r;
  double hz = 0;
  for (const auto& c : z) hz += std::norm(c);
  const Complex k = k_form(z, z);
  r.i1 = std::abs(inv.I(1));
  r.i1_star = std::abs(inv.I_star(1) - hz);
  r.i2 = std::abs(inv.I(2) - k);
  r.i2_star = std::abs(inv.I_star(2));
  r.i3 = std::abs(inv.I(3) - constants::q * inv.I(2));
  r.i3_star = std::abs(inv.I_star(3));
  r.i4 = std::abs(inv.I(4) - constants::qbar * inv.I(2));
  r.i4_star = std::abs(inv.I_star(4));
  r.i5 = std::abs(inv.I(5));
  r.i5_star = std::abs(inv.I_star(5) + inv.I_star(1));
  for (int n = 6; n <= 11; ++n)
    r.trace_invariants =
        std::max({r.trace_invariants, std::abs(inv.I(n)), std::abs(inv.I_star(n))});
  return r;
}

/// H_pk = Tr(U^(3)_p V^(3)_k) = sum_rs U_rsp V_srk, so that
/// (T diamond U diamond V)_ijk = T_ijp H_pk.
inline Matrix h_matrix_direct(const Hypermatrix& u, const Hypermatrix& v) {
  require_dim3(u);
  require_dim3(v);
  Matrix h(3);
  for (std::size_t p = 0; p < 3; ++p) {
    const Matrix up = slice(u, Axis::third, p);
    for (std::size_t k = 0; k < 3; ++k) h(p, k) = (up * slice(v, Axis::third, k)).trace();
  }
  return h;
}

/// H in coordinates: (q/3) K(u, v) on the diagonal, and off the diagonal
///   (q/6) |u^k u^p; v^k v^p| + tau_pkr |u^r u^4; v^r v^4| / (3 sqrt 2)
///                            + conj(tau)_pkr |u^r u^5; v^r v^5| / (3 sqrt 2).
/// `tau_symbol` defaults to tau(); tests pass a corrupted copy to show that
/// the cross-check against h_matrix_direct notices.
inline Matrix h_matrix_closed(const Coords5& u, const Coords5& v,
                              const Hypermatrix& tau_symbol = tau()) {
  require_dim3(tau_symbol);
  auto det2 = [&](std::size_t a, std::size_t b) { return u[a] * v[b] - u[b] * v[a]; };
  const double c = 1.0 / (3.0 * std::sqrt(2.0));
  Matrix h(3);
  const Complex diag = constants::q / 3.0 * k_form(u, v);
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t k = 0; k < 3; ++k) {
      if (p == k) {
        h(p, k) = diag;
        continue;
      }
      Complex s = constants::q / 6.0 * det2(k, p);
      for (std::size_t r = 0; r < 3; ++r)
        s += c * (tau_symbol(p, k, r) * det2(r, 3) + std::conj(tau_symbol(p, k, r)) * det2(r, 4));
      h(p, k) = s;
    }
  return h;
}

/// I2 = T_ijk T_ikj.
inline Complex quadratic_invariant_i2(const Hypermatrix& t) {
  require_dim3(t);
  Complex s{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) s += t(i, j, k) * t(i, k, j);
  return s;
}

/// I2(U) != 0, judged against regularity_rel * |U|^2.
inline bool is_i2_regular(const Hypermatrix& u, double regularity_rel = 1e-9) {
  const double n = norm(u);
  return std::abs(quadratic_invariant_i2(u)) > regularity_rel * n * n;
}

/// U_hat = sqrt(3 / (q I2(U))) U with the principal square root; a right
/// biunit of the diamond product: T diamond U_hat diamond U_hat = T.
inline Hypermatrix make_biunit(const Hypermatrix& u, double membership_rel = 1e-10,
                               double regularity_rel = 1e-9) {
  require_qcyclic(u, membership_rel);
  if (!is_i2_regular(u, regularity_rel))
    throw NotRegularError("not I2-regular: |I2(U)| = " +
                          std::to_string(std::abs(quadratic_invariant_i2(u))));
  const Complex factor = std::sqrt(3.0 / (constants::q * quadratic_invariant_i2(u)));
  return factor * u;
}

} // namespace ternalg
