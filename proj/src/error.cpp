#include "svset/error.hpp"

namespace svset {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ElementNotInCarrier: return "element-not-in-carrier";
    case ErrorCode::NotALattice: return "not-a-lattice";
    case ErrorCode::BadInvolution: return "bad-involution";
    case ErrorCode::DeMorganViolation: return "de-morgan-violation";
    case ErrorCode::BoundsMismatch: return "bounds-mismatch";
    case ErrorCode::InfiniteCarrierExhaustive: return "infinite-carrier-exhaustive";
    case ErrorCode::BadGrid: return "bad-grid";
    case ErrorCode::ShapeMismatch: return "shape-mismatch";
    case ErrorCode::UnknownParam: return "unknown-param";
    case ErrorCode::UnknownElement: return "unknown-element";
    case ErrorCode::ScaleMismatch: return "scale-mismatch";
    case ErrorCode::NonTotalMap: return "non-total-map";
    case ErrorCode::TargetMismatch: return "target-mismatch";
    case ErrorCode::WrongScale: return "wrong-scale";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::ConstraintViolation: return "constraint-violation";
    case ErrorCode::IntervalViolation: return "interval-violation";
    case ErrorCode::VariableDomainUnsupported: return "variable-domain-unsupported";
    case ErrorCode::PresentationMissing: return "presentation-missing";
    case ErrorCode::AlphaIsTop: return "alpha-is-top";
    case ErrorCode::NotAChain: return "not-a-chain";
    case ErrorCode::ClosureCapExceeded: return "closure-size-cap-exceeded";
    case ErrorCode::InvalidFamily: return "invalid-family";
    case ErrorCode::UniverseMismatch: return "universe-mismatch";
    case ErrorCode::NotAGroup: return "not-a-group";
    case ErrorCode::NotAHomomorphism: return "not-a-homomorphism";
    case ErrorCode::NotASubgroup: return "not-a-subgroup";
    case ErrorCode::HomMismatch: return "hom-mismatch";
    case ErrorCode::EmptyCriteria: return "empty-criteria";
    case ErrorCode::LambdaOutOfRange: return "lambda-out-of-range";
    case ErrorCode::BoundMismatch: return "bound-mismatch";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Internal: return "internal-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace svset
