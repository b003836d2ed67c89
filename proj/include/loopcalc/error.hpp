#pragma once

#include <stdexcept>
#include <string>

namespace loopcalc {

enum class ErrorCode {
  Syntax,
  Arity,
  Parameter,
  NotSimplyConnected,
  UnsupportedLoop,
  CapOverflow,
  NotInvertible,
  NegativeShift,
  FieldMismatch,
  MatrixBudgetExceeded,
  EmptyGenerators,
  NotHomogeneous,
  NotAMissingFace,
  MissingFaceTooSmall,
  InvalidComplex,
  SchemaMismatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the parsers; offset is a byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& what)
      : Error(code, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace loopcalc
