#pragma once

// Text form of polynomials.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | var | '(' expr ')' | '-' factor
//
// Rationals are written "a" or "a/b". Implicit multiplication ("2x") is
// rejected. format() prints the canonical form that parse() reads back.

#include "poldif/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace poldif {

/// Ordered, distinct variable names; position i names x_i.
class VariableSet {
 public:
  /// Throws Error on an empty list, duplicates, or names that do not match
  /// [a-zA-Z][a-zA-Z0-9_]*.
  explicit VariableSet(std::vector<std::string> names);

  /// x, y
  static VariableSet default_set();
  /// x1, ..., xk
  static VariableSet indexed(std::size_t k);
  /// Comma-separated list, e.g. "x,y,z".
  static VariableSet from_list(std::string_view list);

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

struct ExprAst {
  enum class Kind { Number, Variable, Add, Sub, Neg, Mul, Pow };

  Kind kind = Kind::Number;
  Rational value;             // Number
  std::size_t variable = 0;   // Variable
  unsigned exponent = 0;      // Pow
  std::size_t position = 0;   // offset of the node's first character
  std::vector<ExprAst> children;
};

/// Throws SyntaxError, UnknownVariable or NegativeExponent.
ExprAst parse_ast(std::string_view text, const VariableSet& vars);

Polynomial evaluate(const ExprAst& ast, std::size_t arity);

/// parse_ast followed by evaluate.
Polynomial parse(std::string_view text, const VariableSet& vars);

/// Canonical text. Throws ArityMismatch if f.arity() != vars.arity().
std::string format(const Polynomial& f, const VariableSet& vars);

}  // namespace poldif
