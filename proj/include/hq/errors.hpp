#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hq {

enum class ErrorCode {
  DivisionByZero,
  MixedDomains,
  MixedModes,
  InvalidMode,
  Overflow,
  NonCommutingSubstitution,
  NonCommutingPair,
  OrderZeroOperand,
  TorsionModeUnsupported,
  NotTorsionMode,
  DegreeCapExceeded,
  NotAnEigenvector,
  ParseError,
  QNotAllowedInRationalMode,
  NegativeExponent,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}
  ParseError(const std::string& what, std::size_t position) : ParseError(ErrorCode::ParseError, position, what) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hq
