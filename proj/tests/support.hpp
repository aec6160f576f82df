#pragma once

#include <complex>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "ternalg/ternalg.hpp"

namespace testing {

/// Matches a complex value within an absolute tolerance.
class NearComplex : public Catch::Matchers::MatcherBase<ternalg::Complex> {
public:
  NearComplex(ternalg::Complex target, double tol) : target_(target), tol_(tol) {}
  bool match(const ternalg::Complex& z) const override { return std::abs(z - target_) <= tol_; }
  std::string describe() const override {
    std::ostringstream s;
    s << "is within " << tol_ << " of " << target_;
    return s.str();
  }

private:
  ternalg::Complex target_;
  double tol_;
};

inline NearComplex near(ternalg::Complex target, double tol = 1e-12) { return {target, tol}; }

inline ternalg::Hypermatrix all_ones(std::size_t dim) {
  return ternalg::Hypermatrix::generate(dim, [](auto, auto, auto) { return ternalg::Complex(1); });
}

} // namespace testing
