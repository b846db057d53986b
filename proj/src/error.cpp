#include "apedwards/error.hpp"

namespace apedwards {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::ZeroDenominator: return "zero-denominator";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::TrivialPoint: return "trivial-point";
    case ErrorCode::DegenerateParameter: return "degenerate-parameter";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::ExceptionalPair: return "exceptional-pair";
    case ErrorCode::NotOnCurve: return "not-on-curve";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace apedwards
