#pragma once

#include <stdexcept>
#include <string>

namespace soqe {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input (undeclared symbol, arity mismatch, nonlinear term, ...).
struct InputError : Error {
  int line = 0;
  int col = 0;
  InputError(const std::string& msg, int l = 0, int c = 0)
      : Error(l > 0 ? std::to_string(l) + ":" + std::to_string(c) + ": " + msg
                    : msg),
        line(l),
        col(c) {}
};

// A configured resource cap was exceeded (max-dnf, ...). Distinct from a
// wrong answer: callers may retry with larger limits.
struct ResourceError : Error {
  using Error::Error;
};

// A documented precondition does not hold (e.g. a partial metric violating
// one of its axioms).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace soqe
