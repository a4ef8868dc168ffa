#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noether {

enum class ErrorKind {
  ContextMismatch,
  DivisionByZero,
  NotInvertible,
  EmptyVariety,
  IndependentSetInvalid,
  PrimeNotMinimal,
  NoStabilization,
  NotOnVariety,
  DenominatorVanishes,
  NumericalFailure,
  DegenerateBasis,
  InterpolationFailed,
  InconsistentSpecializations,
  NeedMorePoints,
  SingularChange,
  NotLiftable,
  ParseError,
  UnknownVariable,
  InvalidInput,
};

std::string_view kind_name(ErrorKind kind) noexcept;

// Every domain failure raised by the library. The kind is stable and is what
// the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace noether
