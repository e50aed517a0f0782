#pragma once

#include <stdexcept>
#include <string>

namespace limfree {

/// Raised on division by an exact zero (scalar, polynomial or rational function).
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// An elementary function evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A constructed certificate failed re-verification. Never expected to fire.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace limfree
