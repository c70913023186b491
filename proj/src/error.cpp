#include "conlat/error.hpp"

namespace conlat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::UnknownFeature: return "UnknownFeature";
    case ErrorCode::SymbolDomainInInstance: return "SymbolDomainInInstance";
    case ErrorCode::InfiniteDomain: return "InfiniteDomain";
    case ErrorCode::NotInSpace: return "NotInSpace";
    case ErrorCode::NoGreatestLowerBound: return "NoGreatestLowerBound";
    case ErrorCode::PolicyError: return "PolicyError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace conlat
