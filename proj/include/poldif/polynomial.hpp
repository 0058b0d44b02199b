#pragma once

#include "poldif/multi_index.hpp"
#include "poldif/rational.hpp"

#include <cstddef>
#include <map>

namespace poldif {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no stored zero coefficients, every key
/// has length arity(). Two polynomials compare equal iff their term maps
/// do. Iteration order is GradedLexGreater (leading term first).
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t arity = 2);

  static Polynomial constant(std::size_t arity, const Rational& value);
  static Polynomial monomial(const MultiIndex& alpha, const Rational& coefficient = 1);
  /// The coordinate function x_i.
  static Polynomial variable(std::size_t arity, std::size_t i);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of x^alpha (zero when absent).
  Rational coefficient(const MultiIndex& alpha) const;

  /// Accumulates c into the coefficient of x^alpha, dropping it if the sum
  /// cancels.
  void add_term(const MultiIndex& alpha, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_;
  Terms terms_;
};

/// Max |alpha| over nonzero terms; -1 for the zero polynomial.
long degree(const Polynomial& f);

/// Degree-j homogeneous part of f.
Polynomial layer(const Polynomial& f, long j);

/// True for 0 and for polynomials whose terms all share one total degree.
bool is_homogeneous(const Polynomial& f);

/// Index of the lowest nonzero layer. Throws ZeroPolynomial for f = 0.
long zero_order(const Polynomial& p);

/// Lowest / highest nonzero layer. Throw ZeroPolynomial for p = 0.
Polynomial lower_layer(const Polynomial& p);
Polynomial upper_layer(const Polynomial& p);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Rational& c);
Polynomial multiply(const Polynomial& f, const Polynomial& g);

/// p(D) f, where D^alpha x^beta = beta!/(beta-alpha)! x^(beta-alpha) for
/// alpha <= beta and 0 otherwise.
Polynomial apply_operator(const Polynomial& p, const Polynomial& f);

/// df/dx_i.
Polynomial derivative(const Polynomial& f, std::size_t variable);

}  // namespace poldif
