#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rts {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  DegreeOutOfRange,
  SizeOutOfRange,
  SpecMismatch,
  DivisionByZero,
  InadmissibleOrder,
  NotPrimePower,
  UnsupportedOrder,
  NotAdmissible,
  ParseError,
  InvariantViolation,
  NotEnoughShares,
  InconsistentShares,
  RepairImpossible,
  TooLarge,
};

// Coarse grouping used by the CLI to pick an exit status.
enum class ErrorCategory { Input, Domain, Guard };

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InadmissibleOrder: return "InadmissibleOrder";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotEnoughShares: return "NotEnoughShares";
    case ErrorCode::InconsistentShares: return "InconsistentShares";
    case ErrorCode::RepairImpossible: return "RepairImpossible";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

constexpr ErrorCategory category(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotEnoughShares:
    case ErrorCode::InconsistentShares:
    case ErrorCode::RepairImpossible:
      return ErrorCategory::Domain;
    case ErrorCode::TooLarge:
      return ErrorCategory::Guard;
    default:
      return ErrorCategory::Input;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rts
