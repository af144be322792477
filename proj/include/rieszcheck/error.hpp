#pragma once

#include <stdexcept>
#include <string>

namespace rieszcheck {

enum class ErrorCode {
  InvalidArgument,
  InvalidParams,
  BadMagic,
  UnsupportedDimension,
  UnsupportedShape,
  TruncatedPayload,
  NonFiniteValue,
  IoFailure,
  DegenerateWeight,
  InsufficientPadding,
  SizeGuard,
  ConfigError,
  InternalError,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code lets
/// callers (the CLI, the python module) map failures without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rieszcheck
