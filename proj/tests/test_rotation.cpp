#include "support.hpp"

using namespace ternalg;
using testing::near;

TEST_CASE("rotation construction") {
  const auto id = Rotation::from_euler_zyz(0, 0, 0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(id(r, c) == (r == c ? 1.0 : 0.0));
  CHECK_THROWS_AS(Rotation({{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}), InputError);
  CHECK_THROWS_AS(Rotation({{{1, 0.1, 0}, {0, 1, 0}, {0, 0, 1}}}), InputError);
  const auto g = random_rotation(3);
  CHECK(g.determinant() == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("identity and composition act correctly") {
  const auto t = random_hypermatrix(3, 4);
  CHECK(rotate(Rotation{}, t) == t);
  const auto g = random_rotation(1), h = random_rotation(2);
  CHECK(max_abs_diff(rotate(g * h, t), rotate(g, rotate(h, t))) < 1e-13);
  CHECK(max_abs_diff(rotate(g.inverse(), rotate(g, t)), t) < 1e-13);
}

TEST_CASE("Levi-Civita is rotation invariant") {
  const auto eps = levi_civita();
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(max_abs_diff(rotate(random_rotation(s), eps), eps) < 1e-14);
}

TEST_CASE("invariants of Levi-Civita") {
  const auto inv = invariants(levi_civita());
  CHECK_THAT(inv.linear, near(6.0));
  CHECK_THAT(inv.I(1), near(6.0));
  CHECK_THAT(inv.I(2), near(-6.0));
  CHECK_THAT(inv.I_star(1), near(6.0));
}

TEST_CASE("invariants of E1") {
  const auto inv = invariants(basis()[0]);
  CHECK_THAT(inv.linear, near(0.0));
  CHECK_THAT(inv.I(1), near(0.0));
  CHECK_THAT(inv.I_star(1), near(1.0));
  CHECK_THAT(inv.I(2), near(1.0));
  CHECK_THAT(inv.I(3), near(constants::q));
  CHECK_THAT(inv.I(4), near(constants::qbar));
  CHECK_THAT(inv.I(5), near(0.0));
  CHECK_THAT(inv.I_star(5), near(-1.0));
}

TEST_CASE("invariants against direct index sums") {
  const auto t = random_hypermatrix(3, 77);
  const auto inv = invariants(t);
  Complex i1{}, i2{}, i5s{}, i6{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        i1 += t(i, j, k) * t(i, j, k);
        i2 += t(i, j, k) * t(i, k, j);
        i5s += t(i, j, k) * (std::conj(t(k, i, j)) + std::conj(t(j, k, i)));
      }
  for (int k = 0; k < 3; ++k) {
    Complex a{};
    for (int i = 0; i < 3; ++i) a += t(i, i, k);
    i6 += a * a;
  }
  CHECK_THAT(inv.I(1), near(i1, 1e-12));
  CHECK_THAT(inv.I(2), near(i2, 1e-12));
  CHECK_THAT(inv.I_star(5), near(i5s, 1e-12));
  CHECK_THAT(inv.I(6), near(i6, 1e-12));
}

TEST_CASE("conjugating T conjugates every invariant") {
  const auto t = random_hypermatrix(3, 31);
  const auto a = invariants(t);
  const auto b = invariants(conj(t));
  for (std::size_t n = 0; n < InvariantRecord::count; ++n) {
    INFO(InvariantRecord::name(n));
    CHECK_THAT(b.value(n), near(std::conj(a.value(n)), 1e-12));
  }
}

TEST_CASE("all 23 invariants are rotation invariant") {
  Xorshift64Star rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_hypermatrix(3, rng);
    const auto g = random_rotation(rng);
    const auto a = invariants(t);
    const auto b = invariants(rotate(g, t));
    const double n = norm(t);
    for (std::size_t f = 0; f < InvariantRecord::count; ++f) {
      INFO(InvariantRecord::name(f));
      CHECK(std::abs(a.value(f) - b.value(f)) <= 1e-9 * std::pow(n, InvariantRecord::degree(f)));
    }
  }
}

TEST_CASE("rotations preserve the Hermitian metric and commute with products") {
  Xorshift64Star rng(9);
  for (auto kind : all_product_kinds) {
    const auto g = random_rotation(rng);
    const auto a = random_hypermatrix(3, rng), b = random_hypermatrix(3, rng),
               c = random_hypermatrix(3, rng);
    CHECK_THAT(hermitian_inner(rotate(g, a), rotate(g, b)), near(hermitian_inner(a, b), 1e-12));
    CHECK(max_abs_diff(rotate(g, ternary_product(kind, a, b, c)),
                       ternary_product(kind, rotate(g, a), rotate(g, b), rotate(g, c))) < 1e-10);
  }
}
