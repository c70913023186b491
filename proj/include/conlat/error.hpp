#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conlat {

enum class ErrorCode {
  DomainMismatch,
  CapExceeded,
  Malformed,
  SchemaMismatch,
  UnknownFeature,
  SymbolDomainInInstance,
  InfiniteDomain,
  NotInSpace,
  NoGreatestLowerBound,
  PolicyError,
  ConfigError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code; the
/// CLI reports it verbatim in its {"error": ...} object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conlat
