#pragma once

#include <memory>
#include <string>
#include <vector>

#include "noether/approx.hpp"
#include "noether/quotient_field.hpp"

namespace noether {

// Runtime description of the scalar field a computation works over. The
// arithmetic itself is static (each field is its own C++ type); this record
// is what gets reported and serialized.
struct FieldContext {
  enum class Kind { Rationals, RationalFunctions, Quotient, Approx };

  Kind kind = Kind::Rationals;
  std::vector<std::string> t_names;             // RationalFunctions, Quotient
  std::shared_ptr<const KappaContext> quotient;  // Quotient
  double tolerance = kDefaultTolerance;          // Approx

  static FieldContext rationals() { return {}; }
  static FieldContext rational_functions(std::vector<std::string> t) {
    return {Kind::RationalFunctions, std::move(t), nullptr, kDefaultTolerance};
  }
  static FieldContext residue_field(std::vector<std::string> t, std::shared_ptr<const KappaContext> q) {
    return {Kind::Quotient, std::move(t), std::move(q), kDefaultTolerance};
  }
  static FieldContext approx(double tol = kDefaultTolerance) { return {Kind::Approx, {}, nullptr, tol}; }

  std::string describe() const;
};

}  // namespace noether
