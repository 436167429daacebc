#pragma once

#include <stdexcept>
#include <string>

namespace min2lin {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct InvalidPath : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidCycle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotSatisfying : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotAField : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotFlexible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotConnected : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedDomain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a post-hoc verification fails; always a bug.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace min2lin
