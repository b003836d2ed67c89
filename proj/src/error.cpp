#include "loopcalc/error.hpp"

namespace loopcalc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Arity: return "ArityError";
    case ErrorCode::Parameter: return "ParameterError";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::UnsupportedLoop: return "UnsupportedLoop";
    case ErrorCode::CapOverflow: return "CapOverflow";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NegativeShift: return "NegativeShift";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::MatrixBudgetExceeded: return "MatrixBudgetExceeded";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotAMissingFace: return "NotAMissingFace";
    case ErrorCode::MissingFaceTooSmall: return "MissingFaceTooSmall";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
  }
  return "Error";
}

}  // namespace loopcalc
