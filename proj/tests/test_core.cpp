#include "support.hpp"

using namespace ternalg;
using testing::near;

TEST_CASE("constants are exact cube and sixth roots of unity") {
  CHECK_THAT(constants::q * constants::q * constants::q, near(1.0, 1e-15));
  CHECK_THAT(1.0 + constants::q + constants::qbar, near(0.0, 1e-15));
  CHECK(constants::qbar == std::conj(constants::q));
  CHECK_THAT(std::pow(constants::eps6, 6), near(1.0, 1e-14));
  CHECK_THAT(constants::eps6 * constants::eps6, near(constants::q, 1e-15));
}

TEST_CASE("approx_equal mixes absolute and relative tolerance") {
  CHECK(approx_equal(Complex(1.0), Complex(1.0 + 5e-13)));
  CHECK_FALSE(approx_equal(Complex(0.0), Complex(1e-11)));
  CHECK(approx_equal(Complex(1e6 + 1e-5), Complex(1e6)));
}

TEST_CASE("construction validates entry count and finiteness") {
  CHECK_THROWS_AS(Hypermatrix(2, std::vector<Complex>(7)), InputError);
  CHECK_THROWS_AS(Hypermatrix(0), InputError);
  std::vector<Complex> bad(8);
  bad[3] = {std::nan(""), 0.0};
  CHECK_THROWS_AS(Hypermatrix(2, bad), InputError);
  CHECK_NOTHROW(Hypermatrix(2, std::vector<Complex>(8)));
}

TEST_CASE("canonical order has the first index slowest") {
  std::vector<Complex> v(8);
  for (int n = 0; n < 8; ++n) v[n] = n;
  const Hypermatrix t(2, v);
  CHECK(t(0, 0, 1) == Complex(1));
  CHECK(t(0, 1, 0) == Complex(2));
  CHECK(t(1, 0, 0) == Complex(4));
}

TEST_CASE("hermitian inner product") {
  const auto eps = levi_civita();
  CHECK_THAT(hermitian_inner(eps, eps), near(6.0));
  const auto a = random_hypermatrix(3, 1);
  const auto b = random_hypermatrix(3, 2);
  CHECK_THAT(hermitian_inner(a, b), near(std::conj(hermitian_inner(b, a)), 1e-13));
  CHECK(hermitian_inner(a, a).real() > 0);
  CHECK_THAT(hermitian_inner(a, a), near(norm(a) * norm(a), 1e-12));
  const Complex s{0.3, -1.2};
  CHECK_THAT(hermitian_inner(s * a, b), near(s * hermitian_inner(a, b), 1e-12));
  CHECK_THAT(hermitian_inner(a, s * b), near(std::conj(s) * hermitian_inner(a, b), 1e-12));
}

TEST_CASE("slices along each axis") {
  const auto t = random_hypermatrix(3, 5);
  for (std::size_t m = 0; m < 3; ++m) {
    const auto s1 = slice(t, Axis::first, m);
    const auto s2 = slice(t, Axis::second, m);
    const auto s3 = slice(t, Axis::third, m);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        CHECK(s1(a, b) == t(m, a, b));
        CHECK(s2(a, b) == t(a, m, b));
        CHECK(s3(a, b) == t(a, b, m));
      }
  }
  for (auto axis : {Axis::first, Axis::second, Axis::third}) {
    std::vector<Matrix> parts;
    for (std::size_t m = 0; m < 3; ++m) parts.push_back(slice(t, axis, m));
    CHECK(from_slices<double>(axis, parts) == t);
  }
}

TEST_CASE("Levi-Civita symbol") {
  const auto e = levi_civita();
  CHECK(e(0, 1, 2) == Complex(1));
  CHECK(e(1, 2, 0) == Complex(1));
  CHECK(e(2, 0, 1) == Complex(1));
  CHECK(e(1, 0, 2) == Complex(-1));
  CHECK(e(0, 0, 1) == Complex(0));
  CHECK(e(2, 2, 2) == Complex(0));
  CHECK(permute_indices(e, {1, 0, 2}) == -e);
}

TEST_CASE("tau symbol values and antisymmetry") {
  const auto t = tau();
  const Complex q = constants::q, qb = constants::qbar;
  CHECK(t(0, 1, 2) == qb);
  CHECK(t(1, 2, 0) == q);
  CHECK(t(2, 0, 1) == Complex(1));
  CHECK(t(1, 0, 2) == -qb);
  CHECK(t(2, 1, 0) == -q);
  CHECK(t(0, 2, 1) == Complex(-1));
  CHECK(permute_indices(t, {1, 0, 2}) == -t);
  const auto third0 = slice(t, Axis::third, 0);
  CHECK(third0(1, 2) == q);
  CHECK(third0(2, 1) == -q);
}

TEST_CASE("generator is reproducible and seed-sensitive") {
  Xorshift64Star a(42), b(42), c(43);
  for (int n = 0; n < 100; ++n) {
    const auto x = a();
    CHECK(x == b());
    (void)c();
  }
  CHECK(random_hypermatrix(3, 9) == random_hypermatrix(3, 9));
  CHECK_FALSE(random_hypermatrix(3, 9) == random_hypermatrix(3, 10));
  Xorshift64Star r(0);
  for (int n = 0; n < 1000; ++n) {
    const double u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("codec round trip is bit exact") {
  for (std::size_t dim : {1u, 2u, 3u, 4u}) {
    const auto t = random_hypermatrix(dim, 100 + dim);
    CHECK(codec::parse(codec::dump(t)) == t);
  }
  const auto awkward = Hypermatrix(1, {Complex(0.1 + 0.2, -1e-300)});
  CHECK(codec::parse(codec::dump(awkward)) == awkward);
}

TEST_CASE("codec error messages locate the problem") {
  auto message = [](const std::string& text) {
    try {
      codec::parse(text, "in.json");
    } catch (const codec::ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  std::string entries26 = "{\"dim\": 3, \"entries\": [";
  for (int n = 0; n < 26; ++n) entries26 += std::string(n ? "," : "") + "[0,0]";
  entries26 += "]}";
  const auto m26 = message(entries26);
  CHECK_THAT(m26, Catch::Matchers::ContainsSubstring("27"));
  CHECK_THAT(m26, Catch::Matchers::ContainsSubstring("26"));
  CHECK_THAT(m26, Catch::Matchers::ContainsSubstring("entries"));

  CHECK_THAT(message("{\"dim\": 2, \"entries\": [[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]}"),
             Catch::Matchers::ContainsSubstring("expected 8"));
  CHECK_THAT(message("{\"dim\": 1, \"entries\": [[0]]}"),
             Catch::Matchers::ContainsSubstring("\"entries\"[0]"));
  CHECK_THAT(message("{\"entries\": []}"), Catch::Matchers::ContainsSubstring("\"dim\""));
  CHECK_THAT(message("{\"dim\": 1,\n \"entries\": [[0, 0]"),
             Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THAT(message("{\"dim\": -1, \"entries\": []}"),
             Catch::Matchers::ContainsSubstring("positive"));
}
