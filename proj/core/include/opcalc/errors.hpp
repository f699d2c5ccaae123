#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opcalc {

enum class ErrorKind {
  NodeCollision,
  MissingDerivative,
  UnsupportedOrder,
  EigensolverFailure,
  DomainError,
  DimensionMismatch,
  IndexError,
  OrderTooHigh,
  InvalidP,
  MissingBound,
  GridTooCoarse,
  BandTypeUnsupported,
  RangeTooNarrow,
  ParseError,
  NonHermitianInput,
  UsageError,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers (and the CLI
/// exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace opcalc
