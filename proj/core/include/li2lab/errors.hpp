#ifndef LI2LAB_ERRORS_HPP
#define LI2LAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace li2lab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside a function's domain (ln(0), arg(0), RogersL outside [0,1], ...).
struct DomainError : Error {
  using Error::Error;
};

// Gamma at a non-positive integer.
struct PoleError : Error {
  using Error::Error;
};

// A result (or intermediate) left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

// A series whose tail could not be certified within the iteration cap.
struct ConvergenceError : Error {
  using Error::Error;
};

// Root selection: region holds two or more roots and no rank was given.
struct AmbiguousRootError : Error {
  using Error::Error;
};

// Root selection: region holds no root.
struct NoRootError : Error {
  using Error::Error;
};

// PSLQ ran out of usable digits before reaching a decision.
struct PrecisionExhausted : Error {
  using Error::Error;
};

// Tanh-sinh hit the level cap before the tolerance.
struct NoConvergence : Error {
  using Error::Error;
};

// Parametric sampling: the domain descriptor admits no points.
struct EmptyDomain : Error {
  using Error::Error;
};

// Expression text rejected; carries the byte offset and what was expected.
struct SyntaxError : Error {
  size_t position;
  std::string expected;
  SyntaxError(size_t pos, const std::string& what_expected)
      : Error("syntax error at position " + std::to_string(pos) + ": expected " + what_expected),
        position(pos), expected(what_expected) {}
};

}  // namespace li2lab

#endif
