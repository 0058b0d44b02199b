#include "poldif/polynomial.hpp"

#include "poldif/errors.hpp"

#include <string>

namespace poldif {

namespace {

void require_same_arity(const Polynomial& f, const Polynomial& g) {
  if (f.arity() != g.arity()) {
    throw ArityMismatch("arity mismatch: " + std::to_string(f.arity()) + " vs " +
                        std::to_string(g.arity()));
  }
}

// beta!/(beta-alpha)!, assuming alpha divides beta.
BigInt derivative_factor(const MultiIndex& alpha, const MultiIndex& beta) {
  BigInt factor = 1;
  for (std::size_t i = 0; i < alpha.arity(); ++i) factor *= falling_factorial(beta[i], alpha[i]);
  return factor;
}

}  // namespace

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {}

Polynomial Polynomial::constant(std::size_t arity, const Rational& value) {
  Polynomial p(arity);
  p.add_term(MultiIndex(arity), value);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, const Rational& coefficient) {
  Polynomial p(alpha.arity());
  p.add_term(alpha, coefficient);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t i) {
  return monomial(MultiIndex::unit(arity, i));
}

Rational Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.arity() != arity_) {
    throw ArityMismatch("monomial of arity " + std::to_string(alpha.arity()) +
                        " added to polynomial of arity " + std::to_string(arity_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(*this, other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_arity(*this, other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b);
  Polynomial product(a.arity());
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) product.add_term(alpha + beta, ca * cb);
  }
  return product;
}

long degree(const Polynomial& f) {
  if (f.is_zero()) return -1;
  return f.terms().begin()->first.total_degree();
}

Polynomial layer(const Polynomial& f, long j) {
  Polynomial out(f.arity());
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.total_degree() == j) out.add_term(alpha, c);
  }
  return out;
}

bool is_homogeneous(const Polynomial& f) {
  if (f.is_zero()) return true;
  return f.terms().rbegin()->first.total_degree() == degree(f);
}

long zero_order(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("zero order of the zero polynomial is undefined");
  return p.terms().rbegin()->first.total_degree();
}

Polynomial lower_layer(const Polynomial& p) { return layer(p, zero_order(p)); }

Polynomial upper_layer(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("upper layer of the zero polynomial is undefined");
  return layer(p, degree(p));
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial sub(const Polynomial& f, const Polynomial& g) { return f - g; }
Polynomial scale(const Polynomial& f, const Rational& c) { return f * c; }
Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial apply_operator(const Polynomial& p, const Polynomial& f) {
  require_same_arity(p, f);
  Polynomial out(f.arity());
  for (const auto& [alpha, a] : p.terms()) {
    for (const auto& [beta, b] : f.terms()) {
      if (!alpha.divides(beta)) continue;
      out.add_term(beta - alpha, a * b * Rational(derivative_factor(alpha, beta)));
    }
  }
  return out;
}

Polynomial derivative(const Polynomial& f, std::size_t variable) {
  return apply_operator(Polynomial::variable(f.arity(), variable), f);
}

}  // namespace poldif
