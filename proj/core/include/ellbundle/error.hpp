#pragma once

#include <stdexcept>
#include <string>

namespace ellbundle {

/// Raised for inputs that violate an operation's domain (cross-field
/// arithmetic, points off the curve, out-of-range parameters, ...).
/// `code` is a short machine-readable tag used by the CLI error JSON.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace ellbundle
