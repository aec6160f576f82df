#include "support.hpp"

using namespace ternalg;
using testing::near;

namespace {

Coords5 random_coords(Xorshift64Star& rng) {
  Coords5 z{};
  for (auto& c : z) c = rng.unit_complex();
  return z;
}

// The coordinate form of T(z), written out slice by slice along the first index.
Hypermatrix written_out(const Coords5& z) {
  const double r6 = 1 / std::sqrt(6.0), r3 = 1 / std::sqrt(3.0);
  const Complex q = constants::q, qb = constants::qbar;
  const auto& [z1, z2, z3, z4, z5] = z;
  std::vector<Complex> v{
      0.0,           -qb * z2 * r6, qb * z3 * r6,
      -q * z2 * r6,  z1 * r6,       z4 * r3,
      q * z3 * r6,   q * z5 * r3,   -z1 * r6,

      -z2 * r6,      q * z1 * r6,   qb * z5 * r3,
      qb * z1 * r6,  0.0,           -qb * z3 * r6,
      qb * z4 * r3,  -q * z3 * r6,  z2 * r6,

      z3 * r6,       q * z4 * r3,   -q * z1 * r6,
      z5 * r3,       -z3 * r6,      q * z2 * r6,
      -qb * z1 * r6, qb * z2 * r6,  0.0,
  };
  return Hypermatrix(3, v);
}

} // namespace

TEST_CASE("basis entries") {
  const auto& e1 = basis()[0];
  CHECK_THAT(e1(0, 1, 1), near(1 / std::sqrt(6.0), 1e-16));
  CHECK_THAT(e1(1, 0, 1), near(constants::q / std::sqrt(6.0), 1e-16));
}

TEST_CASE("from_coords matches the written-out form") {
  Xorshift64Star rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto z = random_coords(rng);
    CHECK(max_abs_diff(from_coords(z), written_out(z)) < 1e-15);
  }
}

TEST_CASE("basis is orthonormal, traceless and q-cyclic") {
  for (std::size_t a = 0; a < 5; ++a) {
    CHECK(qcyclic_residual(basis()[a]) < 1e-15);
    for (std::size_t b = 0; b < 5; ++b)
      CHECK_THAT(hermitian_inner(basis()[a], basis()[b]), near(a == b ? 1.0 : 0.0, 1e-15));
  }
}

TEST_CASE("coordinates round trip") {
  Xorshift64Star rng(2);
  const auto z = random_coords(rng);
  const auto back = to_coords(from_coords(z));
  for (std::size_t a = 0; a < 5; ++a) CHECK_THAT(back[a], near(z[a], 1e-14));
}

TEST_CASE("to_coords rejects hypermatrices outside the space") {
  CHECK_THROWS_AS(to_coords(levi_civita()), InputError);
  CHECK_THROWS_WITH(to_coords(testing::all_ones(3)), Catch::Matchers::ContainsSubstring("trace"));
}

TEST_CASE("K form") {
  Coords5 u{0, 0, 0, 1, 1};
  CHECK_THAT(k_form(u, u), near(2.0 * constants::q));
  Xorshift64Star rng(3);
  const auto a = random_coords(rng), b = random_coords(rng);
  CHECK_THAT(k_form(a, b), near(k_form(b, a), 1e-15));
}

TEST_CASE("K matrix properties") {
  const auto k = k_matrix();
  const auto p = k_matrix_properties(k);
  CHECK(p.symmetric);
  CHECK(p.unitary_residual < 1e-14);
  CHECK(p.det_residual < 1e-14);
  CHECK(p.sixth_power_residual < 1e-13);
  CHECK(p.eigenvalue_residual < 1e-12);
  CHECK(k[3][4] == constants::q);
  CHECK(k[3][3] == Complex(0));
}

TEST_CASE("invariants on the q-cyclic space reduce to h and K") {
  Xorshift64Star rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = from_coords(random_coords(rng));
    CHECK(restricted_invariants_check(t).max() < 1e-12);
    const auto z = to_coords(t);
    CHECK_THAT(quadratic_invariant_i2(t), near(k_form(z, z), 1e-13));
  }
}

TEST_CASE("H matrix: closed form against direct evaluation") {
  Xorshift64Star rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_coords(rng), v = random_coords(rng);
    const auto direct = h_matrix_direct(from_coords(u), from_coords(v));
    const auto closed = h_matrix_closed(u, v);
    for (int p = 0; p < 3; ++p)
      for (int k = 0; k < 3; ++k) CHECK_THAT(closed(p, k), near(direct(p, k), 1e-13));
  }
}

TEST_CASE("H matrix diagonal is (q/3) K and H(U, U) is scalar") {
  Xorshift64Star rng(6);
  const auto u = random_coords(rng);
  const auto h = h_matrix_direct(from_coords(u), from_coords(u));
  for (int p = 0; p < 3; ++p)
    for (int k = 0; k < 3; ++k)
      CHECK_THAT(h(p, k), near(p == k ? constants::q / 3.0 * k_form(u, u) : Complex(0), 1e-13));
}

TEST_CASE("H matrix off-diagonal part is antisymmetric") {
  Xorshift64Star rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = h_matrix_direct(from_coords(random_coords(rng)), from_coords(random_coords(rng)));
    for (int p = 0; p < 3; ++p)
      for (int k = 0; k < 3; ++k)
        if (p != k) CHECK_THAT(h(p, k), near(-h(k, p), 1e-13));
  }
}

TEST_CASE("corrupted tau is detected by the cross-check") {
  Xorshift64Star rng(7);
  const auto u = random_coords(rng), v = random_coords(rng);
  const auto direct = h_matrix_direct(from_coords(u), from_coords(v));
  const auto wrong = h_matrix_closed(u, v, -tau());
  double worst = 0;
  for (int p = 0; p < 3; ++p)
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(wrong(p, k) - direct(p, k)));
  CHECK(worst > 1e-3);
}

TEST_CASE("biunit of E1") {
  const auto e1 = basis()[0];
  const auto u = make_biunit(e1);
  const Complex factor = std::sqrt(3.0) * std::polar(1.0, -constants::pi / 3);
  CHECK(max_abs_diff(u, factor * e1) < 1e-14);
  Xorshift64Star rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto t = random_hypermatrix(3, rng);
    CHECK(biunit_residual(ProductKind::diamond, u, t) <= 1e-12 * norm(t));
  }
}

TEST_CASE("biunit is independent of the scale of U") {
  Xorshift64Star rng(9);
  const auto u = from_coords(random_coords(rng));
  const auto a = make_biunit(u), b = make_biunit(5.0 * u);
  for (const auto& e : {a, b}) {
    const auto t = random_hypermatrix(3, rng);
    CHECK(biunit_residual(ProductKind::diamond, e, t) <= 1e-12 * norm(t));
  }
  CHECK(max_abs_diff(a, b) < 1e-13);
}

TEST_CASE("biunit construction rejects singular and foreign inputs") {
  CHECK_THROWS_AS(make_biunit(basis()[3]), NotRegularError);
  CHECK_THROWS_WITH(make_biunit(basis()[4]), Catch::Matchers::ContainsSubstring("not I2-regular"));
  CHECK_THROWS_AS(make_biunit(levi_civita()), InputError);
  CHECK_FALSE(is_i2_regular(basis()[3]));
  CHECK(is_i2_regular(basis()[0]));
}

TEST_CASE("scaling identity holds on regular and singular U") {
  Xorshift64Star rng(10);
  std::vector<Hypermatrix> us{basis()[3], basis()[4]};
  for (int n = 0; n < 5; ++n) us.push_back(from_coords(random_coords(rng)));
  for (const auto& u : us) {
    const auto t = random_hypermatrix(3, rng);
    const auto lhs = ternary_product(ProductKind::diamond, t, u, u);
    const auto rhs = (constants::q * quadratic_invariant_i2(u) / 3.0) * t;
    CHECK(distance(lhs, rhs) <= 1e-12 * norm(t) * norm(u) * norm(u));
  }
}

TEST_CASE("biunit residual is homogeneous in T") {
  const auto u = make_biunit(basis()[1]);
  const auto t = random_hypermatrix(3, 11);
  const double r1 = biunit_residual(ProductKind::diamond, u, t);
  const double r2 = biunit_residual(ProductKind::diamond, u, 1e3 * t);
  CHECK(r2 <= 1e3 * r1 + 1e-10);
}
