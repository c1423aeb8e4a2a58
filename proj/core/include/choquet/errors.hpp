#pragma once

#include <stdexcept>
#include <string>

namespace choquet {

// A set or point lies outside the ground domain of a capacity or function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed arguments: size mismatches, invalid parameters.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of a theorem-level check does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The sampling window of an operator does not cover the cells it needs.
class WindowError : public std::out_of_range {
 public:
  WindowError(const std::string& what, double required_bound)
      : std::out_of_range(what), required_bound_(required_bound) {}

  double required_bound() const noexcept { return required_bound_; }

 private:
  double required_bound_;
};

}  // namespace choquet
