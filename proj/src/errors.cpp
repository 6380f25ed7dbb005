#include "archzeta/errors.hpp"

namespace archzeta {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotInRing: return "NotInRing";
    case ErrorCode::IrreducibleGammaContent: return "IrreducibleGammaContent";
    case ErrorCode::NotConstant: return "NotConstant";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::AuditStructuralFailure: return "AuditStructuralFailure";
  }
  return "Unknown";
}

}  // namespace archzeta
