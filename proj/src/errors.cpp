#include "hq/errors.hpp"

namespace hq {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedDomains: return "MixedDomains";
    case ErrorCode::MixedModes: return "MixedModes";
    case ErrorCode::InvalidMode: return "InvalidMode";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonCommutingSubstitution: return "NonCommutingSubstitution";
    case ErrorCode::NonCommutingPair: return "NonCommutingPair";
    case ErrorCode::OrderZeroOperand: return "OrderZeroOperand";
    case ErrorCode::TorsionModeUnsupported: return "TorsionModeUnsupported";
    case ErrorCode::NotTorsionMode: return "NotTorsionMode";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotAnEigenvector: return "NotAnEigenvector";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::QNotAllowedInRationalMode: return "QNotAllowedInRationalMode";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
  }
  return "Error";
}

}  // namespace hq
