#pragma once

/// SO(3) acting on 3x3x3 hypermatrices as a covariant tensor,
///   (g.T)_prs = g_pi g_rj g_sk T_ijk,
/// and the linear and quadratic invariants of that action.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "ternalg/hypermatrix.hpp"
#include "ternalg/random.hpp"

namespace ternalg {

class Rotation {
public:
  using Entries = std::array<std::array<double, 3>, 3>;

  Rotation() : g_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}} {}

  /// Rejects matrices that are not orthogonal with determinant +1 (to `tol`).
  explicit Rotation(const Entries& g, double tol = 1e-12) : g_(g) {
    double worst = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double s = 0;
        for (int r = 0; r < 3; ++r) s += g_[r][a] * g_[r][b];
        worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
      }
    if (worst > tol) throw InputError("rotation matrix is not orthogonal");
    if (std::abs(determinant() - 1.0) > tol) throw InputError("rotation determinant is not +1");
  }

  /// Rz(alpha) Ry(beta) Rz(gamma).
  static Rotation from_euler_zyz(double alpha, double beta, double gamma) {
    auto rz = [](double t) {
      return Entries{{{std::cos(t), -std::sin(t), 0}, {std::sin(t), std::cos(t), 0}, {0, 0, 1}}};
    };
    const Entries ry{{{std::cos(beta), 0, std::sin(beta)},
                      {0, 1, 0},
                      {-std::sin(beta), 0, std::cos(beta)}}};
    return Rotation(multiply(multiply(rz(alpha), ry), rz(gamma)));
  }

  const Entries& entries() const { return g_; }
  double operator()(int r, int c) const { return g_[r][c]; }

  double determinant() const {
    return g_[0][0] * (g_[1][1] * g_[2][2] - g_[1][2] * g_[2][1]) -
           g_[0][1] * (g_[1][0] * g_[2][2] - g_[1][2] * g_[2][0]) +
           g_[0][2] * (g_[1][0] * g_[2][1] - g_[1][1] * g_[2][0]);
  }

  Rotation inverse() const {
    Entries t{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t[r][c] = g_[c][r];
    return Rotation(t);
  }

  friend Rotation operator*(const Rotation& a, const Rotation& b) {
    return Rotation(multiply(a.g_, b.g_));
  }

private:
  static Entries multiply(const Entries& a, const Entries& b) {
    Entries c{};
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k)
        for (int s = 0; s < 3; ++s) c[r][s] += a[r][k] * b[k][s];
    return c;
  }

  Entries g_;
};

/// Three Euler angles (z-y-z) drawn uniformly from [0, 2 pi). Not Haar measure.
inline Rotation random_rotation(Xorshift64Star& rng) {
  const double two_pi = 2.0 * constants::pi;
  const double a = rng.uniform(0, two_pi);
  const double b = rng.uniform(0, two_pi);
  const double c = rng.uniform(0, two_pi);
  return Rotation::from_euler_zyz(a, b, c);
}

inline Rotation random_rotation(std::uint64_t seed) {
  Xorshift64Star rng(seed);
  return random_rotation(rng);
}

/// One mode at a time, so 3 * 81 multiply-adds rather than 729.
template <std::floating_point Real>
BasicHypermatrix<Real> rotate(const Rotation& g, const BasicHypermatrix<Real>& t) {
  require_dim3(t);
  BasicHypermatrix<Real> a(3), b(3), c(3);
  for (int p = 0; p < 3; ++p)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) a(p, j, k) += Real(g(p, i)) * t(i, j, k);
  for (int p = 0; p < 3; ++p)
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) b(p, r, k) += Real(g(r, j)) * a(p, j, k);
  for (int p = 0; p < 3; ++p)
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        for (int k = 0; k < 3; ++k) c(p, r, s) += Real(g(s, k)) * b(p, r, k);
  return c;
}

/// The linear invariant I = eps_ijk T_ijk and the 22 quadratic invariants
/// I1..I11 with their conjugate-paired partners I1*..I11*.
struct InvariantRecord {
  Complex linear{};
  std::array<Complex, 11> plain{};    // I1..I11
  std::array<Complex, 11> starred{};  // I1*..I11*

  static constexpr std::size_t count = 23;

  /// I, I1, ..., I11, I1*, ..., I11*
  static std::string name(std::size_t n) {
    if (n == 0) return "I";
    if (n <= 11) return "I" + std::to_string(n);
    return "I" + std::to_string(n - 11) + "*";
  }
  Complex value(std::size_t n) const {
    if (n == 0) return linear;
    if (n <= 11) return plain[n - 1];
    return starred[n - 12];
  }
  /// Polynomial degree of field n in T (1 for I, 2 otherwise).
  static int degree(std::size_t n) { return n == 0 ? 1 : 2; }

  Complex I(int n) const { return plain.at(n - 1); }
  Complex I_star(int n) const { return starred.at(n - 1); }
};

namespace detail {

// sum over T_ijk X_{perm(ijk)} where X is T or conj(T); perm as in permute_indices
inline Complex contract_permuted(const Hypermatrix& t, const Hypermatrix& x,
                                 const std::array<int, 3>& p) {
  Complex s{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const std::array<std::size_t, 3> v{i, j, k};
        s += t(i, j, k) * x(v[p[0]], v[p[1]], v[p[2]]);
      }
  return s;
}

inline Complex dot3(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline std::array<Complex, 3> conj3(const std::array<Complex, 3>& a) {
  return {std::conj(a[0]), std::conj(a[1]), std::conj(a[2])};
}

} // namespace detail

inline InvariantRecord invariants(const Hypermatrix& t) {
  require_dim3(t);
  InvariantRecord r;
  r.linear = hermitian_inner(t, levi_civita());  // eps is real

  const Hypermatrix tb = conj(t);
  // I1: T_ijk X_ijk, I2: X_ikj, I3: X_jik, I4: X_kji, I5: X_kij + X_jki
  const std::array<std::array<int, 3>, 4> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
  for (std::size_t n = 0; n < 4; ++n) {
    r.plain[n] = detail::contract_permuted(t, t, perms[n]);
    r.starred[n] = detail::contract_permuted(t, tb, perms[n]);
  }
  r.plain[4] = detail::contract_permuted(t, t, {2, 0, 1}) + detail::contract_permuted(t, t, {1, 2, 0});
  r.starred[4] =
      detail::contract_permuted(t, tb, {2, 0, 1}) + detail::contract_permuted(t, tb, {1, 2, 0});

  // a_k = T_iik, b_j = T_iji, c_i = T_ijj
  const auto tr = trace_vectors(t);
  const auto& a = tr[0];
  const auto& b = tr[1];
  const auto& c = tr[2];
  const auto ab = detail::conj3(a), bb = detail::conj3(b), cb = detail::conj3(c);
  using detail::dot3;
  r.plain[5] = dot3(a, a);
  r.starred[5] = dot3(a, ab);
  r.plain[6] = dot3(b, b);
  r.starred[6] = dot3(b, bb);
  r.plain[7] = dot3(c, c);
  r.starred[7] = dot3(c, cb);
  r.plain[8] = dot3(a, c);
  r.starred[8] = dot3(a, cb);
  r.plain[9] = 0.5 * (dot3(a, b) + dot3(b, a));
  r.starred[9] = 0.5 * (dot3(a, bb) + dot3(b, ab));
  r.plain[10] = 0.5 * (dot3(b, c) + dot3(c, b));
  r.starred[10] = 0.5 * (dot3(b, cb) + dot3(c, bb));
  return r;
}

} // namespace ternalg
