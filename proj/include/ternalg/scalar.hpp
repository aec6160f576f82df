#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <stdexcept>
#include <string>

namespace ternalg {

template <std::floating_point Real>
using BasicComplex = std::complex<Real>;

using Complex = BasicComplex<double>;

/// Raised for malformed input: wrong sizes, non-finite values, failed preconditions.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace constants {

inline constexpr long double pi_l = 3.141592653589793238462643383279502884L;
inline constexpr long double half_sqrt3_l = 0.866025403784438646763723170752936183L;

/// Primitive cube root of unity exp(2 pi i / 3).
template <std::floating_point Real>
inline constexpr BasicComplex<Real> q_v{Real(-0.5L), Real(half_sqrt3_l)};

template <std::floating_point Real>
inline constexpr BasicComplex<Real> qbar_v{Real(-0.5L), Real(-half_sqrt3_l)};

/// Primitive sixth root of unity exp(i pi / 3).
template <std::floating_point Real>
inline constexpr BasicComplex<Real> eps6_v{Real(0.5L), Real(half_sqrt3_l)};

inline constexpr Complex q = q_v<double>;
inline constexpr Complex qbar = qbar_v<double>;
inline constexpr Complex eps6 = eps6_v<double>;
inline constexpr double pi = static_cast<double>(pi_l);

} // namespace constants

namespace tolerance {
inline constexpr double atol = 1e-12;
inline constexpr double rtol = 1e-10;
} // namespace tolerance

template <std::floating_point Real>
bool is_finite(const BasicComplex<Real>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// |a - b| <= atol + rtol * |b|
template <std::floating_point Real>
bool approx_equal(const BasicComplex<Real>& a, const BasicComplex<Real>& b,
                  double atol = tolerance::atol, double rtol = tolerance::rtol) {
  return std::abs(a - b) <= atol + rtol * std::abs(b);
}

} // namespace ternalg
