#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mellin {

enum class ErrorKind {
  InvalidArgument,
  IndexOutOfRange,
  LengthMismatch,
  DerivativeUnavailable,
  QuadratureFailure,
  NonConjugateIndices,
  DeviationTooLarge,
  NonMonotone,
  BandLimitExceeded,
  MissingAnchor,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers (the CLI in
/// particular) which precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mellin
