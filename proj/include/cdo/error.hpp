#pragma once

#include <stdexcept>
#include <string>

namespace cdo {

enum class ErrorCode {
  InputError,
  NotTwoEdgeConnected,
  NegativeLength,
  SelfLoop,
  Unreachable,
  NodeNotOnPath,
  NoCycle,
  MalformedIntersection,
  AncestorRelation,
  NoCrossNode,
  EmptyCandidate,
  BoundViolation,
  UnsupportedInstance,
  LedgerMiss,
  MissingContainingBrother,
  BrokenI,
  NotStronglyConnected,
  TooLarge,
  GenerationFailed,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cdo
