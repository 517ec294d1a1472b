#include "mellin/error.hpp"

namespace mellin {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DerivativeUnavailable: return "DerivativeUnavailable";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::NonConjugateIndices: return "NonConjugateIndices";
    case ErrorKind::DeviationTooLarge: return "DeviationTooLarge";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::BandLimitExceeded: return "BandLimitExceeded";
    case ErrorKind::MissingAnchor: return "MissingAnchor";
  }
  return "Unknown";
}

}  // namespace mellin
