#include "noether/errors.hpp"

namespace noether {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::EmptyVariety: return "EmptyVariety";
    case ErrorKind::IndependentSetInvalid: return "IndependentSetInvalid";
    case ErrorKind::PrimeNotMinimal: return "PrimeNotMinimal";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NotOnVariety: return "NotOnVariety";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::InterpolationFailed: return "InterpolationFailed";
    case ErrorKind::InconsistentSpecializations: return "InconsistentSpecializations";
    case ErrorKind::NeedMorePoints: return "NeedMorePoints";
    case ErrorKind::SingularChange: return "SingularChange";
    case ErrorKind::NotLiftable: return "NotLiftable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace noether
