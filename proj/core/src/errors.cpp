#include "opcalc/errors.hpp"

namespace opcalc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NodeCollision: return "NodeCollision";
    case ErrorKind::MissingDerivative: return "MissingDerivative";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::EigensolverFailure: return "EigensolverFailure";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::OrderTooHigh: return "OrderTooHigh";
    case ErrorKind::InvalidP: return "InvalidP";
    case ErrorKind::MissingBound: return "MissingBound";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::BandTypeUnsupported: return "BandTypeUnsupported";
    case ErrorKind::RangeTooNarrow: return "RangeTooNarrow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace opcalc
