#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgag {

/// Operand outside an operation's domain (empty set, unit ideal, DVR where a
/// proper maximal ideal is needed, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Generators do not define a numerical semigroup (gcd != 1, non-positive).
class NotNumericalSemigroup : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A required inclusion B ⊆ A fails; carries one element of B outside A.
class ContainmentError : public std::logic_error {
 public:
  ContainmentError(const std::string& what, std::int64_t witness)
      : std::logic_error(what + " (witness " + std::to_string(witness) + ")"),
        witness_(witness) {}

  std::int64_t witness() const noexcept { return witness_; }

 private:
  std::int64_t witness_;
};

/// An identity that must hold by theory failed. Always a bug, never a result.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sgag
