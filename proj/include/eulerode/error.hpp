#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerode {

/// Failure taxonomy shared by every module. The C API status codes and the
/// CLI exit codes are both derived from this enum and nothing else.
enum class ErrorCode {
  Parse,
  InvalidArgument,
  NotDefinedAtZero,
  BasisMismatch,
  EulerSumUndefined,
  InverseExpansionUndefined,
  PadeDegenerate,
  OracleDegenerate,
  SummationInconsistent,
  ReductionFailed,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Parse, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace eulerode
