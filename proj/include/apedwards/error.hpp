#pragma once

#include <stdexcept>
#include <string>

namespace apedwards {

// Stable error categories; the C API maps these one-to-one onto ape_status.
enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  ZeroDenominator,
  DivisionByZero,
  FieldMismatch,
  TrivialPoint,
  DegenerateParameter,
  Pole,
  Degenerate,
  ExceptionalPair,
  NotOnCurve,
  Unsupported,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace apedwards
