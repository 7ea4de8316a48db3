#include "juror/error.hpp"

namespace juror {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kCatalogMismatch: return "CatalogMismatch";
    case ErrorKind::kNotIndependent: return "NotIndependent";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kForeignTestimony: return "ForeignTestimony";
    case ErrorKind::kNotExpressible: return "NotExpressible";
    case ErrorKind::kZeroConditioningEvent: return "ZeroConditioningEvent";
    case ErrorKind::kAlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kDegeneratePrior: return "DegeneratePrior";
    case ErrorKind::kThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorKind::kZeroTranscriptMass: return "ZeroTranscriptMass";
    case ErrorKind::kDegenerateUtilities: return "DegenerateUtilities";
    case ErrorKind::kNonpositiveRatio: return "NonpositiveRatio";
    case ErrorKind::kUndefinedRatio: return "UndefinedRatio";
    case ErrorKind::kCatalogTooSmall: return "CatalogTooSmall";
    case ErrorKind::kEmptyMatchWithMatchingDefendant: return "EmptyMatchWithMatchingDefendant";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kAxiomViolation: return 2;
    case ErrorKind::kParseError: return 3;
    case ErrorKind::kCatalogMismatch: return 4;
    case ErrorKind::kNotIndependent: return 5;
    case ErrorKind::kCapExceeded: return 6;
    case ErrorKind::kForeignTestimony: return 7;
    case ErrorKind::kNotExpressible: return 8;
    case ErrorKind::kZeroConditioningEvent: return 9;
    case ErrorKind::kAlgebraMismatch: return 10;
    case ErrorKind::kOutOfRange: return 11;
    case ErrorKind::kDegeneratePrior: return 12;
    case ErrorKind::kThetaOutOfRange: return 13;
    case ErrorKind::kZeroTranscriptMass: return 14;
    case ErrorKind::kDegenerateUtilities: return 15;
    case ErrorKind::kNonpositiveRatio: return 16;
    case ErrorKind::kUndefinedRatio: return 17;
    case ErrorKind::kCatalogTooSmall: return 18;
    case ErrorKind::kEmptyMatchWithMatchingDefendant: return 19;
    case ErrorKind::kInvalidArgument: return 20;
  }
  return 1;
}

}  // namespace juror
