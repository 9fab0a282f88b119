#pragma once

#include <stdexcept>
#include <string>

namespace orbicalc {

/// Raised when an input or an intermediate result violates a named invariant.
/// The CLI maps it to exit status 1 and reports `invariant()` verbatim.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string invariant, const std::string& message)
      : std::runtime_error(message), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// An internal consistency check failed. This always indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orbicalc
