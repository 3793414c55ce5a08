#include "reid/error.hpp"

namespace reid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PrimeSearchFailed: return "PrimeSearchFailed";
    case ErrorKind::IllFormedEndo: return "IllFormedEndo";
    case ErrorKind::UnsupportedSubgroupForm: return "UnsupportedSubgroupForm";
    case ErrorKind::InfiniteReidemeister: return "InfiniteReidemeister";
    case ErrorKind::NotSoluble: return "NotSoluble";
    case ErrorKind::QuotientNotAbelian: return "QuotientNotAbelian";
    case ErrorKind::SpecParseError: return "SpecParseError";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace reid
