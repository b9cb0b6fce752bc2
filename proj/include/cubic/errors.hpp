#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubic {

/// Raised by exact division when the divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when inverting a circulant element with C(a) = 0.
class SingularElement : public std::domain_error {
 public:
  SingularElement() : std::domain_error("singular element: C(a) = 0") {}
};

/// A value cannot be represented in the requested coefficient domain,
/// e.g. converting 1/2 to an Integer.
class DomainMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Binary polynomial operation on operands over different variable sets.
class VarSetMismatch : public std::invalid_argument {
 public:
  VarSetMismatch() : std::invalid_argument("variable set mismatch") {}
};

class UnknownVariable : public std::invalid_argument {
 public:
  explicit UnknownVariable(const std::string& name)
      : std::invalid_argument("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Text input that does not follow the expected grammar. `position` is the
/// zero-based byte offset where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cubic
