#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "noether/errors.hpp"
#include "noether/rational.hpp"

namespace noether {

using ApproxComplex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-8;

inline bool approx_zero(const ApproxComplex& a, double tol = kDefaultTolerance) { return std::abs(a) <= tol; }

inline ApproxComplex to_complex(const Rational& q) { return {q.to_double(), 0.0}; }

// Raises NumericalFailure on NaN or infinity.
inline const ApproxComplex& check_finite(const ApproxComplex& a, const char* what = "value") {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
    fail(ErrorKind::NumericalFailure, std::string("non-finite ") + what);
  return a;
}

// Shortest round-trip decimals; complex values print as "a+bi", real ones without "i".
std::string format_complex(const ApproxComplex& a);
std::string format_double(double v);

}  // namespace noether
