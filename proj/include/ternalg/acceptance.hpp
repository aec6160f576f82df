#pragma once

/// End-to-end acceptance checks for the library. Each criterion is a list of
/// named numeric checks with pinned tolerances; a criterion passes when all
/// of its checks do. Used by the acceptance test binary and `ternalg selftest`.

#include <algorithm>
#include <cctype>
#include <limits>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ternalg/decomp.hpp"
#include "ternalg/linalg.hpp"
#include "ternalg/qcyclic.hpp"
#include "ternalg/random.hpp"
#include "ternalg/rotation.hpp"
#include "ternalg/schemes.hpp"
#include "ternalg/ternary.hpp"

namespace ternalg::acceptance {

inline std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Check {
  enum class Bound { at_most, at_least };

  std::string name;
  double value = 0;
  double threshold = 0;
  Bound bound = Bound::at_most;

  bool pass() const { return bound == Bound::at_most ? value <= threshold : value >= threshold; }

  /// "CHECK <name> residual=<r> tol=<t> PASS|FAIL" (or value/min for lower bounds).
  std::string line() const {
    const char* status = pass() ? "PASS" : "FAIL";
    if (bound == Bound::at_most)
      return "CHECK " + name + " residual=" + fmt(value) + " tol=" + fmt(threshold) + " " + status;
    return "CHECK " + name + " value=" + fmt(value) + " min=" + fmt(threshold) + " " + status;
  }
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
  }
  void at_most(std::string name, double value, double tol) {
    checks.push_back({std::move(name), value, tol, Check::Bound::at_most});
  }
  void at_least(std::string name, double value, double min) {
    checks.push_back({std::move(name), value, min, Check::Bound::at_least});
  }
};

/// Deliberate faults, for showing that the suite can fail.
struct Mutations {
  bool flip_tau_sign = false;       // criterion 9 compares against -tau
  bool plain_middle_bracket = false;  // criterion 1 uses a.(b.c.f).g
};

struct Options {
  std::uint64_t seed = 0;
  Mutations mutations;
};

namespace detail {

inline Xorshift64Star stream(const Options& o, int criterion) {
  return Xorshift64Star(o.seed * 0x100000001B3ULL + static_cast<std::uint64_t>(criterion));
}

inline Coords5 random_coords(Xorshift64Star& rng) {
  Coords5 z{};
  for (auto& c : z) c = rng.unit_complex();
  return z;
}

inline std::string kind_tag(ProductKind k) {
  std::string s(to_string(k));
  for (auto& ch : s) ch = static_cast<char>(std::tolower(ch));
  return s;
}

} // namespace detail

/// 1. Generalized associativity for all four products at dims 2, 3, 4.
inline Criterion generalized_associativity(const Options& o) {
  Criterion c{1, "generalized associativity, 200 quintuples x dims {2,3,4} per product", {}, {}};
  auto rng = detail::stream(o, 1);
  const auto middle =
      o.mutations.plain_middle_bracket ? MiddleBracket::plain : MiddleBracket::swapped;
  for (auto kind : all_product_kinds)
    for (std::size_t dim : {2, 3, 4}) {
      double worst = 0;
      for (int t = 0; t < 200; ++t) {
        std::array<Hypermatrix, 5> x{random_hypermatrix(dim, rng), random_hypermatrix(dim, rng),
                                     random_hypermatrix(dim, rng), random_hypermatrix(dim, rng),
                                     random_hypermatrix(dim, rng)};
        const double r = associativity_residual(kind, x[0], x[1], x[2], x[3], x[4], middle);
        worst = std::max(worst, r / operand_scale(x[0], x[1], x[2], x[3], x[4]));
      }
      c.at_most("c1.assoc." + detail::kind_tag(kind) + ".dim" + std::to_string(dim), worst, 1e-10);
    }
  return c;
}

/// 2. Factorized products against the direct index sum.
inline Criterion product_vs_reference(const Options& o) {
  Criterion c{2, "factorized product vs index-sum reference, 100 triples per product and dim", {}, {}};
  auto rng = detail::stream(o, 2);
  for (auto kind : all_product_kinds)
    for (std::size_t dim : {2, 3, 4}) {
      double worst = 0;
      for (int t = 0; t < 100; ++t) {
        const auto a = random_hypermatrix(dim, rng);
        const auto b = random_hypermatrix(dim, rng);
        const auto d = random_hypermatrix(dim, rng);
        worst = std::max(worst, max_abs_diff(ternary_product(kind, a, b, d),
                                             ternary_product_reference(kind, a, b, d)));
      }
      c.at_most("c2.oracle." + detail::kind_tag(kind) + ".dim" + std::to_string(dim), worst, 1e-12);
    }
  return c;
}

/// 3. Brute-force scheme search reproduces exactly the four products.
inline Criterion scheme_enumeration(const Options& o) {
  Criterion c{3, "scheme enumeration: exactly P1..P4 survive within the product patterns", {}, {}};
  const auto report = enumerate_schemes(3, 20, o.seed);
  const auto in = report.pattern_survivors();
  std::array<int, 4> hits{};
  int unexpected = 0;
  for (const auto& v : in) {
    if (v.product)
      ++hits[static_cast<int>(*v.product)];
    else
      ++unexpected;
  }
  for (auto kind : all_product_kinds)
    c.at_most("c3.survivor_missing." + detail::kind_tag(kind),
              hits[static_cast<int>(kind)] == 1 ? 0.0 : 1.0, 0.0);
  c.at_most("c3.unexpected_in_pattern_survivors", unexpected, 0.0);
  c.notes.push_back("schemes examined: " + std::to_string(report.schemes_examined) +
                    ", survivors: " + std::to_string(report.survivors.size()));
  for (const auto& v : report.extra_survivors())
    c.notes.push_back("FLAGGED extra survivor outside product patterns: " + v.scheme.encoding());
  return c;
}

/// 4. Weight decomposition: reconstruction, membership, dimensions,
///    orthogonality, equivariance.
inline Criterion weight_decomposition(const Options& o) {
  Criterion c{4, "weight decomposition on 27 basis + 100 random inputs", {}, {}};
  auto rng = detail::stream(o, 4);
  std::vector<Hypermatrix> inputs;
  for (std::size_t m = 0; m < 27; ++m) {
    std::vector<Complex> e(27);
    e[m] = 1;
    inputs.emplace_back(3, std::move(e));
  }
  for (int t = 0; t < 100; ++t) inputs.push_back(random_hypermatrix(3, rng));

  double recon = 0, ortho = 0, equi = 0;
  std::array<double, 4> member{};
  std::array<std::vector<Hypermatrix>, 4> images;
  for (std::size_t n = 0; n < inputs.size(); ++n) {
    const auto& t = inputs[n];
    const auto p = weight_decompose(t);
    recon = std::max(recon, max_abs_diff(p.t0 + p.t1 + p.t2 + p.t3, t));
    for (int w = 0; w < 4; ++w) {
      member[w] = std::max(member[w], weight_membership_residual(p.part(w), w));
      for (int v = w + 1; v < 4; ++v)
        ortho = std::max(ortho, std::abs(hermitian_inner(p.part(w), p.part(v))));
      if (n < 27) images[w].push_back(p.part(w));
    }
    const auto g = random_rotation(rng);
    const auto pr = weight_decompose(rotate(g, t));
    for (int w = 0; w < 4; ++w)
      equi = std::max(equi, max_abs_diff(pr.part(w), rotate(g, p.part(w))));
  }
  c.at_most("c4.reconstruction", recon, 1e-12);
  for (int w = 0; w < 4; ++w)
    c.at_most("c4.membership.t" + std::to_string(w), member[w], 1e-12);
  const std::array<int, 4> expected{1, 9, 10, 7};
  for (int w = 0; w < 4; ++w) {
    const int rank = linalg::gram_rank(images[w]);
    c.at_most("c4.gram_rank.t" + std::to_string(w) + ".expected" + std::to_string(expected[w]),
              std::abs(rank - expected[w]), 0.0);
  }
  c.at_most("c4.pairwise_orthogonality", ortho, 1e-12);
  c.at_most("c4.equivariance", equi, 1e-10);
  return c;
}

/// 5. Cyclic projector algebra.
inline Criterion projector_algebra(const Options& o) {
  Criterion c{5, "xi projectors: idempotent, complete, annihilating, eigenrelations", {}, {}};
  auto rng = detail::stream(o, 5);
  const std::array<CyclicEigenvalue, 3> eigs{CyclicEigenvalue::one, CyclicEigenvalue::q,
                                             CyclicEigenvalue::qbar};
  const std::array<Complex, 3> lambda{1.0, constants::q, constants::qbar};
  double idem = 0, complete = 0, annihilate = 0, eigen = 0;
  for (int t = 0; t < 100; ++t) {
    const auto x = random_hypermatrix(3, rng);
    std::array<Hypermatrix, 3> p{xi_project(x, eigs[0]), xi_project(x, eigs[1]),
                                 xi_project(x, eigs[2])};
    complete = std::max(complete, max_abs_diff(p[0] + p[1] + p[2], x));
    for (int a = 0; a < 3; ++a) {
      idem = std::max(idem, max_abs_diff(xi_project(p[a], eigs[a]), p[a]));
      for (int b = 0; b < 3; ++b)
        if (a != b) annihilate = std::max(annihilate, max_abs(xi_project(p[a], eigs[b])));
      eigen = std::max(eigen, max_abs_diff(substitute(p[a]), lambda[a] * p[a]));
      eigen = std::max(eigen, max_abs_diff(xi_project(substitute(x), eigs[a]), lambda[a] * p[a]));
    }
  }
  c.at_most("c5.idempotence", idem, 1e-14);
  c.at_most("c5.completeness", complete, 1e-14);
  c.at_most("c5.mutual_annihilation", annihilate, 1e-14);
  c.at_most("c5.eigenrelations", eigen, 1e-14);
  return c;
}

/// 6. Rotation invariance of the invariants and of h; equivariance of products.
inline Criterion rotation_invariance(const Options& o) {
  Criterion c{6, "SO(3): 23 invariants, h, product equivariance", {}, {}};
  auto rng = detail::stream(o, 6);
  double inv = 0, herm = 0, prod = 0;
  for (int t = 0; t < 20; ++t) {
    const auto x = random_hypermatrix(3, rng);
    const auto y = random_hypermatrix(3, rng);
    const auto z = random_hypermatrix(3, rng);
    const auto base = invariants(x);
    const double nx = norm(x);
    const Complex hxy = hermitian_inner(x, y);
    for (int r = 0; r < 50; ++r) {
      const auto g = random_rotation(rng);
      const auto gx = rotate(g, x);
      const auto rot = invariants(gx);
      for (std::size_t n = 0; n < InvariantRecord::count; ++n) {
        const double scale = InvariantRecord::degree(n) == 1 ? nx : nx * nx;
        inv = std::max(inv, std::abs(rot.value(n) - base.value(n)) / scale);
      }
      const auto gy = rotate(g, y);
      herm = std::max(herm, std::abs(hermitian_inner(gx, gy) - hxy) / (nx * norm(y)));
      const auto gz = rotate(g, z);
      for (auto kind : all_product_kinds)
        prod = std::max(prod, max_abs_diff(ternary_product(kind, gx, gy, gz),
                                           rotate(g, ternary_product(kind, x, y, z))));
    }
  }
  c.at_most("c6.invariants_relative", inv, 1e-9);
  c.at_most("c6.hermitian_metric_relative", herm, 1e-9);
  c.at_most("c6.product_equivariance", prod, 1e-10);
  return c;
}

/// 7. Invariant identities on the q-cyclic traceless space.
inline Criterion restricted_invariants(const Options& o) {
  Criterion c{7, "restricted invariant identities on 100 coordinate vectors", {}, {}};
  auto rng = detail::stream(o, 7);
  double worst = 0;
  for (int t = 0; t < 100; ++t)
    worst = std::max(worst,
                     restricted_invariants_check(from_coords(detail::random_coords(rng))).max());
  c.at_most("c7.restricted_identities", worst, 1e-12);
  return c;
}

/// 8. Properties of the K matrix.
inline Criterion k_matrix_criterion(const Options&) {
  Criterion c{8, "K matrix: symmetric, unitary, det, sixth power, eigenvalues", {}, {}};
  const auto p = k_matrix_properties(k_matrix());
  c.at_most("c8.symmetric_exact", p.symmetric ? 0.0 : 1.0, 0.0);
  c.at_most("c8.unitary", p.unitary_residual, 1e-14);
  c.at_most("c8.determinant", p.det_residual, 1e-12);
  c.at_most("c8.sixth_power", p.sixth_power_residual, 1e-12);
  c.at_most("c8.eigenvalues", p.eigenvalue_residual, 1e-10);
  return c;
}

/// 9. Closed-form H against the direct trace computation.
inline Criterion h_matrix_crosscheck(const Options& o) {
  Criterion c{9, "auxiliary matrix H: closed form vs direct traces", {}, {}};
  auto rng = detail::stream(o, 9);
  const Hypermatrix tau_symbol = o.mutations.flip_tau_sign ? -tau() : tau();
  double diff = 0, offdiag = 0;
  for (int t = 0; t < 200; ++t) {
    const auto u = detail::random_coords(rng);
    const auto v = detail::random_coords(rng);
    const auto closed = h_matrix_closed(u, v, tau_symbol);
    const auto direct = h_matrix_direct(from_coords(u), from_coords(v));
    const auto same = h_matrix_closed(u, u, tau_symbol);
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t k = 0; k < 3; ++k) {
        diff = std::max(diff, std::abs(closed(p, k) - direct(p, k)));
        if (p != k) offdiag = std::max(offdiag, std::abs(same(p, k)));
      }
  }
  c.at_most("c9.closed_vs_direct", diff, 1e-12);
  c.at_most("c9.offdiagonal_vanishes_for_u_eq_v", offdiag, 1e-13);
  return c;
}

/// 10. Right biunits and the scaling identity behind them.
inline Criterion biunits(const Options& o) {
  Criterion c{10, "right biunits from I2-regular q-cyclic U; scaling identity", {}, {}};
  auto rng = detail::stream(o, 10);
  std::vector<Hypermatrix> regular, singular;
  while (regular.size() < 100) {
    auto u = from_coords(detail::random_coords(rng));
    if (is_i2_regular(u)) regular.push_back(std::move(u));
  }
  // K(z, z) = 0: pick z1..z4 and solve for z5; plus the bare E4 and E5.
  singular.push_back(basis()[3]);
  singular.push_back(basis()[4]);
  for (int t = 0; t < 18; ++t) {
    auto z = detail::random_coords(rng);
    z[4] = -(z[0] * z[0] + z[1] * z[1] + z[2] * z[2]) / (2.0 * constants::q * z[3]);
    singular.push_back(from_coords(z));
  }
  std::vector<Hypermatrix> ts;
  for (int t = 0; t < 100; ++t) ts.push_back(random_hypermatrix(3, rng));

  double biunit = 0, scaling = 0, singular_i2 = 0;
  for (const auto& u : regular) {
    const auto uh = make_biunit(u);
    for (const auto& t : ts)
      biunit = std::max(biunit, biunit_residual(ProductKind::diamond, uh, t) / norm(t));
  }
  auto scaling_check = [&](const Hypermatrix& u) {
    const Complex factor = constants::q * quadratic_invariant_i2(u) / 3.0;
    const double nu = norm(u);
    for (const auto& t : ts)
      scaling = std::max(scaling,
                         distance(ternary_product(ProductKind::diamond, t, u, u), factor * t) /
                             (norm(t) * nu * nu));
  };
  for (const auto& u : regular) scaling_check(u);
  for (const auto& u : singular) {
    scaling_check(u);
    const double nu = norm(u);
    singular_i2 = std::max(singular_i2, std::abs(quadratic_invariant_i2(u)) / (nu * nu));
  }
  c.at_most("c10.right_biunit_relative", biunit, 1e-9);
  c.at_most("c10.scaling_identity_relative", scaling, 1e-10);
  c.at_most("c10.singular_inputs_have_zero_i2", singular_i2, 1e-12);
  return c;
}

/// 11. The basis E1..E5.
inline Criterion basis_criterion(const Options& o) {
  Criterion c{11, "basis E1..E5: orthonormal, traceless q-cyclic, coordinate round trip", {}, {}};
  auto rng = detail::stream(o, 11);
  double gram = 0, member = 0, trip = 0;
  const auto& e = basis();
  for (std::size_t a = 0; a < 5; ++a) {
    member = std::max(member, qcyclic_residual(e[a]));
    for (std::size_t b = 0; b < 5; ++b)
      gram = std::max(gram, std::abs(hermitian_inner(e[a], e[b]) - (a == b ? 1.0 : 0.0)));
  }
  for (int t = 0; t < 100; ++t) {
    const auto z = detail::random_coords(rng);
    const auto back = to_coords(from_coords(z));
    for (std::size_t a = 0; a < 5; ++a) trip = std::max(trip, std::abs(back[a] - z[a]));
  }
  c.at_most("c11.orthonormality", gram, 1e-15);
  c.at_most("c11.traceless_qcyclic", member, 1e-15);
  c.at_most("c11.coordinate_round_trip", trip, 1e-14);
  return c;
}

/// 12. Permutation-sum residual on the two exclusion-law families.
inline Criterion exclusion(const Options& o) {
  Criterion c{12, "permutation-sum residual on weight-0/weight-2 parts vs random", {}, {}};
  auto rng = detail::stream(o, 12);
  double members = 0;
  double random_min = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 100; ++t) {
    const auto x = random_hypermatrix(3, rng);
    const auto p = weight_decompose(x);
    members = std::max({members, exclusion_residuals(p.t0).perm_sum_residual,
                        exclusion_residuals(p.t2).perm_sum_residual});
    const auto unit = (1.0 / norm(x)) * x;
    random_min = std::min(random_min, exclusion_residuals(unit).perm_sum_residual);
  }
  c.at_most("c12.perm_sum_on_t0_t2", members, 1e-13);
  c.at_least("c12.perm_sum_on_unit_random", random_min, 0.1);
  return c;
}

inline double worst_ratio(const Criterion& c) {
  double r = 0;
  for (const auto& ch : c.checks)
    if (ch.bound == Check::Bound::at_most)
      r = std::max(r, ch.threshold > 0 ? ch.value / ch.threshold
                                       : (ch.value > 0 ? std::numeric_limits<double>::infinity() : 0));
  return r;
}

/// 13. The suite is not vacuous: each injected fault trips its criterion.
inline Criterion mutation_sensitivity(const Options& o) {
  Criterion c{13, "mutation sensitivity: tau sign flip and unswapped middle bracket", {}, {}};
  Options tau_flip = o;
  tau_flip.mutations = {true, false};
  const auto c9 = h_matrix_crosscheck(tau_flip);
  c.at_least("c13.tau_sign_flip_fails_c9.worst_ratio", worst_ratio(c9), 1.0);

  Options plain = o;
  plain.mutations = {false, true};
  const auto c1 = generalized_associativity(plain);
  int failing = 0;
  for (const auto& ch : c1.checks) failing += ch.pass() ? 0 : 1;
  c.at_least("c13.plain_middle_bracket_fails_c1.failing_checks", failing, 1.0);
  return c;
}

inline std::vector<std::function<Criterion(const Options&)>> all_criteria() {
  return {generalized_associativity, product_vs_reference, scheme_enumeration,
          weight_decomposition,      projector_algebra,    rotation_invariance,
          restricted_invariants,     k_matrix_criterion,   h_matrix_crosscheck,
          biunits,                   basis_criterion,      exclusion,
          mutation_sensitivity};
}

inline std::vector<Criterion> run_all(const Options& o) {
  std::vector<Criterion> out;
  for (const auto& f : all_criteria()) out.push_back(f(o));
  return out;
}

/// CHECK lines, notes, then one summary row per criterion.
inline std::string format_text(const std::vector<Criterion>& results) {
  std::ostringstream out;
  for (const auto& c : results) {
    for (const auto& ch : c.checks) out << ch.line() << "\n";
    for (const auto& n : c.notes) out << "NOTE " << n << "\n";
  }
  out << "\nSUMMARY\n";
  int passed = 0;
  for (const auto& c : results) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  criterion %2d  %-4s  %s\n", c.id, c.pass() ? "PASS" : "FAIL",
                  c.title.c_str());
    out << buf;
    passed += c.pass() ? 1 : 0;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return out.str();
}

} // namespace ternalg::acceptance
