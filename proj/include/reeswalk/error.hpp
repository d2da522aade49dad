#ifndef REESWALK_ERROR_HPP
#define REESWALK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reeswalk {

enum class ErrorCode {
  EmptyComplex,
  EmptyFacet,
  DuplicateFacet,
  NonMaximalFacet,
  IndexOutOfRange,
  UnknownVertex,
  LengthMismatch,
  InvalidWalkPair,
  NotAnEvenWalk,
  IsAnEvenWalk,
  NotAGraph,
  DisconnectedWalk,
  LimitExceeded,
  ResourceLimit,
  OrderMismatch,
  HypothesisNotMet,
  IdentityCheckFailed,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::EmptyFacet: return "EmptyFacet";
    case ErrorCode::DuplicateFacet: return "DuplicateFacet";
    case ErrorCode::NonMaximalFacet: return "NonMaximalFacet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidWalkPair: return "InvalidWalkPair";
    case ErrorCode::NotAnEvenWalk: return "NotAnEvenWalk";
    case ErrorCode::IsAnEvenWalk: return "IsAnEvenWalk";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::DisconnectedWalk: return "DisconnectedWalk";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::IdentityCheckFailed: return "IdentityCheckFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `indices()` carries the offending
/// 1-based facet indices when the error is about specific facets.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace reeswalk

#endif  // REESWALK_ERROR_HPP
