#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace juror {

// Every failure the library can report. The CLI maps each kind to its own
// exit code (see exit_code()).
enum class ErrorKind {
  kAxiomViolation,
  kParseError,
  kCatalogMismatch,
  kNotIndependent,
  kCapExceeded,
  kForeignTestimony,
  kNotExpressible,
  kZeroConditioningEvent,
  kAlgebraMismatch,
  kOutOfRange,
  kDegeneratePrior,
  kThetaOutOfRange,
  kZeroTranscriptMass,
  kDegenerateUtilities,
  kNonpositiveRatio,
  kUndefinedRatio,
  kCatalogTooSmall,
  kEmptyMatchWithMatchingDefendant,
  kInvalidArgument,
};

std::string_view error_name(ErrorKind kind);
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace juror
