#pragma once

// Small dense helpers backed by Eigen: Gram ranks, eigenvalues, determinants.

#include <algorithm>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ternalg/hypermatrix.hpp"

namespace ternalg::linalg {

using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

/// Hermitian Gram matrix G_ab = h(v_a, v_b).
inline MatrixXc gram_matrix(std::span<const Hypermatrix> vs) {
  const auto n = static_cast<Eigen::Index>(vs.size());
  MatrixXc g(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) g(a, b) = hermitian_inner(vs[a], vs[b]);
  return g;
}

/// Dimension of span(vs): eigenvalues of the Gram matrix above rel_tol * largest.
inline int gram_rank(std::span<const Hypermatrix> vs, double rel_tol = 1e-9) {
  if (vs.empty()) return 0;
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(gram_matrix(vs), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  if (top == 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] > rel_tol * top) ++rank;
  return rank;
}

inline std::vector<Complex> eigenvalues(const MatrixXc& m) {
  Eigen::ComplexEigenSolver<MatrixXc> solver(m, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Smallest achievable max |a_i - b_pi(i)| over bijections pi (n <= 8).
inline double multiset_distance(std::vector<Complex> a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<std::size_t> perm(b.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

} // namespace ternalg::linalg
