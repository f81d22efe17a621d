#include "iwartin/error.hpp"

namespace iwartin {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::ElementNotInGroup: return "ElementNotInGroup";
    case Errc::POrderViolation: return "POrderViolation";
    case Errc::NotAnInvolution: return "NotAnInvolution";
    case Errc::ConductorOverflow: return "ConductorOverflow";
    case Errc::NotAMultiple: return "NotAMultiple";
    case Errc::ArithmeticOverflow: return "ArithmeticOverflow";
    case Errc::NoSuitableModularPrime: return "NoSuitableModularPrime";
    case Errc::OrthogonalityFailure: return "OrthogonalityFailure";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotASubMultiset: return "NotASubMultiset";
    case Errc::InvalidInstance: return "InvalidInstance";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::InvalidTwist: return "InvalidTwist";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace iwartin
