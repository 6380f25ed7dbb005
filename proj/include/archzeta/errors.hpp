#pragma once

#include <stdexcept>
#include <string>

namespace archzeta {

enum class ErrorCode {
  InvalidArgument,
  ConditionViolated,
  DivisionByZero,
  NonPositiveArgument,
  Overflow,
  NotInRing,
  IrreducibleGammaContent,
  NotConstant,
  BoundExceeded,
  DegenerateDenominator,
  AuditStructuralFailure,
};

const char* error_code_name(ErrorCode code);

// Validation failures (bad user input) map to ErrorCode::InvalidArgument and
// ConditionViolated; everything else is a computation error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_validation() const noexcept {
    return code_ == ErrorCode::InvalidArgument ||
           code_ == ErrorCode::ConditionViolated;
  }

 private:
  ErrorCode code_;
};

}  // namespace archzeta
