#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace svset {

enum class ErrorCode {
  ElementNotInCarrier,
  NotALattice,
  BadInvolution,
  DeMorganViolation,
  BoundsMismatch,
  InfiniteCarrierExhaustive,
  BadGrid,
  ShapeMismatch,
  UnknownParam,
  UnknownElement,
  ScaleMismatch,
  NonTotalMap,
  TargetMismatch,
  WrongScale,
  OutOfRange,
  ConstraintViolation,
  IntervalViolation,
  VariableDomainUnsupported,
  PresentationMissing,
  AlphaIsTop,
  NotAChain,
  ClosureCapExceeded,
  InvalidFamily,
  UniverseMismatch,
  NotAGroup,
  NotAHomomorphism,
  NotASubgroup,
  HomMismatch,
  EmptyCriteria,
  LambdaOutOfRange,
  BoundMismatch,
  Parse,
  InvalidArgument,
  Internal,
};

/// Stable kebab-case identifier, used in CLI messages and JSON reports.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace svset
