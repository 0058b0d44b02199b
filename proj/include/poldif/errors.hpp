#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace poldif {

/// Base class for every recoverable error raised by the library:
/// precondition failures on user input and unsolvable systems.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

/// p = 0 handed to the solver. `rhs_is_zero` tells whether every f solves
/// (q = 0) or nothing does.
class ZeroOperator : public Error {
 public:
  explicit ZeroOperator(bool rhs_is_zero);
  bool rhs_is_zero() const { return rhs_is_zero_; }

 private:
  bool rhs_is_zero_;
};

class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class AmbientTooSmall : public Error {
 public:
  using Error::Error;
};

/// rank([M | b]) > rank(M).
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// A guarantee the algorithms rely on was observed to fail. Always a bug.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DegreeDescentFailure : public InternalDefect {
 public:
  using InternalDefect::InternalDefect;
};

/// Parse failures carry the 0-based character offset and what the parser
/// would have accepted there.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position,
             std::vector<std::string> expected = {});

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownVariable : public ParseError {
 public:
  using ParseError::ParseError;
};

class NegativeExponent : public ParseError {
 public:
  using ParseError::ParseError;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace poldif
