#include "poldif/expr.hpp"

#include "poldif/errors.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace poldif {

namespace {

constexpr unsigned kMaxExponent = 10000;

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t position;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Number, text.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::Ident, text.substr(start, i - start), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw SyntaxError("syntax error at position " + std::to_string(start) +
                              ": unexpected character '" + std::string(1, c) + "'",
                          start);
    }
    out.push_back({kind, text.substr(start, 1), start});
    ++i;
  }
  out.push_back({Tok::End, {}, text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const VariableSet& vars) : tokens_(tokenize(text)), vars_(vars) {}

  ExprAst parse() {
    ExprAst root = expr();
    if (peek().kind != Tok::End) fail({"'+'", "'-'", "'*'", "end of input"});
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::ostringstream msg;
    msg << "syntax error at position " << t.position << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg << (i + 1 == expected.size() ? " or " : ", ");
      msg << expected[i];
    }
    msg << ", found " << describe(t);
    throw SyntaxError(msg.str(), t.position, std::move(expected));
  }

  static ExprAst binary(ExprAst::Kind kind, ExprAst lhs, ExprAst rhs) {
    ExprAst node;
    node.kind = kind;
    node.position = lhs.position;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto kind = next().kind == Tok::Plus ? ExprAst::Kind::Add : ExprAst::Kind::Sub;
      lhs = binary(kind, std::move(lhs), term());
    }
    return lhs;
  }

  ExprAst term() {
    ExprAst lhs = factor();
    while (peek().kind == Tok::Star) {
      next();
      lhs = binary(ExprAst::Kind::Mul, std::move(lhs), factor());
    }
    return lhs;
  }

  ExprAst factor() {
    ExprAst b = base();
    if (peek().kind != Tok::Caret) return b;
    next();
    if (peek().kind == Tok::Minus) {
      throw NegativeExponent("negative exponent at position " + std::to_string(peek().position) +
                                 ": exponents must be natural numbers",
                             peek().position, {"natural number"});
    }
    if (peek().kind != Tok::Number) fail({"natural number"});
    const Token& e = next();
    if (e.text.size() > 5 || std::stoul(std::string(e.text)) > kMaxExponent) {
      throw SyntaxError("exponent at position " + std::to_string(e.position) + " exceeds " +
                            std::to_string(kMaxExponent),
                        e.position, {"natural number <= " + std::to_string(kMaxExponent)});
    }
    ExprAst node;
    node.kind = ExprAst::Kind::Pow;
    node.position = b.position;
    node.exponent = static_cast<unsigned>(std::stoul(std::string(e.text)));
    node.children.push_back(std::move(b));
    return node;
  }

  ExprAst base() {
    const Token& t = peek();
    ExprAst node;
    node.position = t.position;
    switch (t.kind) {
      case Tok::Number: {
        next();
        BigInt num(std::string(t.text));
        BigInt den = 1;
        if (peek().kind == Tok::Slash) {
          next();
          if (peek().kind != Tok::Number) fail({"integer denominator"});
          const Token& d = next();
          den = BigInt(std::string(d.text));
          if (den == 0) {
            throw SyntaxError("zero denominator at position " + std::to_string(d.position), d.position,
                              {"nonzero integer"});
          }
        }
        node.kind = ExprAst::Kind::Number;
        node.value = Rational(num, den);
        return node;
      }
      case Tok::Ident: {
        next();
        const auto index = vars_.index_of(t.text);
        if (!index) {
          throw UnknownVariable("unknown variable '" + std::string(t.text) + "' at position " +
                                    std::to_string(t.position),
                                t.position);
        }
        node.kind = ExprAst::Kind::Variable;
        node.variable = *index;
        return node;
      }
      case Tok::LParen: {
        next();
        ExprAst inner = expr();
        if (peek().kind != Tok::RParen) fail({"')'", "'+'", "'-'", "'*'"});
        next();
        return inner;
      }
      case Tok::Minus: {
        next();
        node.kind = ExprAst::Kind::Neg;
        node.children.push_back(factor());
        return node;
      }
      default:
        fail({"number", "variable", "'('", "'-'"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const VariableSet& vars_;
};

Polynomial power(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.arity(), 1);
  Polynomial square = base;
  while (exponent) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1;
    if (exponent) square = square * square;
  }
  return result;
}

}  // namespace

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("variable list must not be empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw Error("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

VariableSet VariableSet::default_set() { return VariableSet({"x", "y"}); }

VariableSet VariableSet::indexed(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  return VariableSet(std::move(names));
}

VariableSet VariableSet::from_list(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.find(',', start);
    std::string_view item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    names.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return VariableSet(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

ExprAst parse_ast(std::string_view text, const VariableSet& vars) { return Parser(text, vars).parse(); }

Polynomial evaluate(const ExprAst& ast, std::size_t arity) {
  switch (ast.kind) {
    case ExprAst::Kind::Number:
      return Polynomial::constant(arity, ast.value);
    case ExprAst::Kind::Variable:
      return Polynomial::variable(arity, ast.variable);
    case ExprAst::Kind::Add:
      return evaluate(ast.children[0], arity) + evaluate(ast.children[1], arity);
    case ExprAst::Kind::Sub:
      return evaluate(ast.children[0], arity) - evaluate(ast.children[1], arity);
    case ExprAst::Kind::Neg:
      return -evaluate(ast.children[0], arity);
    case ExprAst::Kind::Mul:
      return evaluate(ast.children[0], arity) * evaluate(ast.children[1], arity);
    case ExprAst::Kind::Pow:
      return power(evaluate(ast.children[0], arity), ast.exponent);
  }
  throw InternalDefect("unhandled expression node");
}

Polynomial parse(std::string_view text, const VariableSet& vars) {
  return evaluate(parse_ast(text, vars), vars.arity());
}

std::string format(const Polynomial& f, const VariableSet& vars) {
  if (f.arity() != vars.arity()) {
    throw ArityMismatch("polynomial has arity " + std::to_string(f.arity()) + " but " +
                        std::to_string(vars.arity()) + " variables were given");
  }
  if (f.is_zero()) return "0";

  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Rational magnitude = negative ? Rational(-c) : c;
    std::string monomial;
    for (std::size_t i = 0; i < alpha.arity(); ++i) {
      if (alpha[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += vars.name(i);
      if (alpha[i] > 1) monomial += "^" + std::to_string(alpha[i]);
    }
    if (monomial.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += to_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

}  // namespace poldif
