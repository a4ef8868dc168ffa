#include "noether/field_context.hpp"

namespace noether {
namespace {

std::string join(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s;
}

}  // namespace

std::string FieldContext::describe() const {
  switch (kind) {
    case Kind::Rationals: return "QQ";
    case Kind::RationalFunctions: return "QQ(" + join(t_names) + ")";
    case Kind::Quotient: {
      std::string base = t_names.empty() ? "QQ" : "QQ(" + join(t_names) + ")";
      return "residue field of degree " + std::to_string(quotient ? quotient->degree() : 0) + " over " + base;
    }
    case Kind::Approx: return "CC (tolerance " + format_double(tolerance) + ")";
  }
  return "";
}

}  // namespace noether
