#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwartin {

enum class Errc {
  InvalidPermutation,
  OrderCapExceeded,
  ElementNotInGroup,
  POrderViolation,
  NotAnInvolution,
  ConductorOverflow,
  NotAMultiple,
  ArithmeticOverflow,
  NoSuitableModularPrime,
  OrthogonalityFailure,
  GroupMismatch,
  NonIntegerMultiplicity,
  NotASubgroup,
  NotSquarefree,
  NotASubMultiset,
  InvalidInstance,
  PrecisionExhausted,
  DegreeCapExceeded,
  SearchExhausted,
  InvalidTwist,
  SchemaViolation,
  ParseError,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace iwartin
