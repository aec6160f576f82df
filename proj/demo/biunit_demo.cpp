// Builds the right biunit of the diamond product from E1 + 2 E4 and checks
// T.U.U = T on a few random hypermatrices.

#include <cstdio>

#include "ternalg/ternalg.hpp"

int main() {
  using namespace ternalg;
  const Hypermatrix u = from_coords({1.0, 0.0, 0.0, 2.0, 0.0});
  std::printf("I2(U) = %.12g%+.12gi\n", quadratic_invariant_i2(u).real(),
              quadratic_invariant_i2(u).imag());

  const Hypermatrix e = make_biunit(u);
  Xorshift64Star rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    const auto t = random_hypermatrix(3, rng);
    std::printf("|T.E.E - T| / |T| = %.3g\n",
                biunit_residual(ProductKind::diamond, e, t) / norm(t));
  }
}
