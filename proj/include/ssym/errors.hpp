#pragma once

#include <stdexcept>
#include <string>

namespace ssym {

/// Two operands live in different rings (different m, n, T flag or characteristic).
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact division by a monomial was requested but some term is not divisible.
class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed polynomial or generator-expression text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

class NotSymmetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotSupersymmetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument outside the documented range (index out of range, k not in (0, p), ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step that the construction guarantees has failed. Indicates a bug or a
/// falsified mathematical claim, never bad user input.
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ssym
