#pragma once

#include <optional>

#include "noether/polynomial.hpp"

namespace noether {

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<QPoly> divide_exact(const QPoly& a, const QPoly& b);

// Greatest common divisor in Q[vars], normalized to leading coefficient 1
// (grevlex). gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

// Scales p by a positive rational so its coefficients are coprime integers.
QPoly primitive_integer_part(const QPoly& p);

// Makes the grevlex leading coefficient 1.
QPoly make_monic(const QPoly& p);

// Variables that occur in p.
std::vector<bool> occurring_variables(const QPoly& p);

}  // namespace noether
