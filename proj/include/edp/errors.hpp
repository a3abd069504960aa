#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edp {

// Root of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised by exact polynomial division when the remainder is non-zero. Inside
// the division-polynomial recursions this means an implementation bug.
class NotExactlyDivisible : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidCurve : public Error {
 public:
  using Error::Error;
};

class NotOnCurve : public Error {
 public:
  using Error::Error;
};

// A group-law or recursion denominator vanished at the given input. `index`
// carries the recursion step for the alpha recursion, 0 elsewhere.
class ExceptionalDenominator : public Error {
 public:
  explicit ExceptionalDenominator(const std::string& what, std::size_t index = 0)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ExceptionalPoint : public Error {
 public:
  using Error::Error;
};

// The point is n-torsion, so the requested formula divides by zero.
class TorsionDenominator : public Error {
 public:
  using Error::Error;
};

class UndefinedAtPoint : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FixtureMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace edp
