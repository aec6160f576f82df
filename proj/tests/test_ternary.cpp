#include "support.hpp"

using namespace ternalg;
using testing::near;

TEST_CASE("fast products agree with the index sum") {
  for (auto kind : all_product_kinds)
    for (std::size_t dim : {1u, 2u, 3u, 5u}) {
      Xorshift64Star rng(dim * 10 + static_cast<int>(kind));
      const auto a = random_hypermatrix(dim, rng);
      const auto b = random_hypermatrix(dim, rng);
      const auto c = random_hypermatrix(dim, rng);
      CHECK(max_abs_diff(ternary_product(kind, a, b, c), ternary_product_reference(kind, a, b, c)) <
            1e-12);
    }
}

TEST_CASE("all-ones inputs give n^3 everywhere") {
  const auto ones = testing::all_ones(2);
  for (auto kind : all_product_kinds) {
    const auto p = ternary_product(kind, ones, ones, ones);
    for (const auto& e : p.entries()) CHECK(e == Complex(8));
  }
}

TEST_CASE("products are trilinear") {
  Xorshift64Star rng(11);
  const Complex s{0.7, -0.4};
  for (auto kind : all_product_kinds) {
    const auto a = random_hypermatrix(3, rng), a2 = random_hypermatrix(3, rng);
    const auto b = random_hypermatrix(3, rng), c = random_hypermatrix(3, rng);
    auto p = [kind](const auto& x, const auto& y, const auto& z) {
      return ternary_product(kind, x, y, z);
    };
    CHECK(max_abs_diff(p(s * a + a2, b, c), s * p(a, b, c) + p(a2, b, c)) < 1e-12);
    CHECK(max_abs_diff(p(a, s * b, c), s * p(a, b, c)) < 1e-12);
    CHECK(max_abs_diff(p(a, b, s * c), s * p(a, b, c)) < 1e-12);
  }
}

TEST_CASE("mismatched dimensions are rejected") {
  const auto a = random_hypermatrix(2, 1);
  const auto b = random_hypermatrix(3, 1);
  CHECK_THROWS_AS(ternary_product(ProductKind::p1, a, b, b), InputError);
  CHECK_THROWS_AS(ternary_product(ProductKind::bullet, b, b, a), InputError);
}

TEST_CASE("generalized associativity holds for every product and dimension") {
  Xorshift64Star rng(2024);
  for (auto kind : all_product_kinds)
    for (std::size_t dim : {1u, 2u, 3u, 4u})
      for (int trial = 0; trial < 10; ++trial) {
        std::array<Hypermatrix, 5> x{random_hypermatrix(dim, rng), random_hypermatrix(dim, rng),
                                     random_hypermatrix(dim, rng), random_hypermatrix(dim, rng),
                                     random_hypermatrix(dim, rng)};
        const double scale = operand_scale(x[0], x[1], x[2], x[3], x[4]);
        INFO(to_string(kind) << " dim " << dim << " trial " << trial);
        CHECK(associativity_residual(kind, x[0], x[1], x[2], x[3], x[4]) <= 1e-10 * scale);
      }
}

TEST_CASE("the unswapped middle bracket is not associative") {
  Xorshift64Star rng(5);
  for (auto kind : all_product_kinds) {
    std::array<Hypermatrix, 5> x{random_hypermatrix(3, rng), random_hypermatrix(3, rng),
                                 random_hypermatrix(3, rng), random_hypermatrix(3, rng),
                                 random_hypermatrix(3, rng)};
    const double scale = operand_scale(x[0], x[1], x[2], x[3], x[4]);
    CHECK(associativity_residual(kind, x[0], x[1], x[2], x[3], x[4], MiddleBracket::plain) >
          1e-3 * scale);
  }
}

TEST_CASE("product kind names") {
  CHECK(parse_product_kind("diamond") == ProductKind::diamond);
  CHECK(parse_product_kind("4") == ProductKind::bullet);
  CHECK(parse_product_kind("P2") == ProductKind::p2);
  CHECK_FALSE(parse_product_kind("5").has_value());
  CHECK(to_string(ProductKind::diamond) == "P3");
}

TEST_CASE("contraction schemes validate their pairs") {
  CHECK_THROWS_AS(ContractionScheme({0, 7, 8}, {{{1, 2}, {3, 4}, {5, 6}}}), InputError);
  CHECK_THROWS_AS(ContractionScheme({0, 7, 8}, {{{0, 4}, {2, 5}, {3, 6}}}), InputError);
  CHECK_NOTHROW(ContractionScheme({0, 7, 8}, {{{1, 4}, {2, 5}, {3, 6}}}));
  CHECK(all_schemes().size() == 558);
}

TEST_CASE("scheme encodings of the four products") {
  CHECK(scheme_of(ProductKind::p1).encoding() == "A1=i | (A2,B2)(A3,B3)(B1,C1) | C2=j C3=k");
  CHECK(scheme_of(ProductKind::bullet).encoding() == "A1=i A2=j | (A3,B3)(B1,C1)(B2,C2) | C3=k");
  for (auto kind : all_product_kinds) {
    CHECK(classify(scheme_of(kind)) == kind);
    CHECK(scheme_of(kind).in_product_pattern());
  }
}

TEST_CASE("scheme evaluation matches the product it encodes") {
  Xorshift64Star rng(8);
  const auto a = random_hypermatrix(3, rng), b = random_hypermatrix(3, rng),
             c = random_hypermatrix(3, rng);
  for (auto kind : all_product_kinds)
    CHECK(max_abs_diff(scheme_of(kind).evaluate(a, b, c), ternary_product(kind, a, b, c)) < 1e-12);
}

TEST_CASE("scheme search recovers the four products") {
  const auto report = enumerate_schemes(3, 5, 0);
  CHECK(report.schemes_examined == 558);
  CHECK(report.reproduces_four_products());
  for (const auto& v : report.extra_survivors()) CHECK_FALSE(v.product.has_value());
  const auto text = format_report(report);
  for (auto kind : all_product_kinds)
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring(std::string(to_string(kind))));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("four products reproduced: yes"));
}
