#pragma once

// Test-only reference routines. Deliberately share no code with the
// library's elimination: plain Gauss-Jordan over std::vector<Rational>, and
// operator matrices built by repeated single-variable differentiation.

#include "poldif/multi_index.hpp"
#include "poldif/polynomial.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace poldif::reference {

using Rows = std::vector<std::vector<Rational>>;

inline std::size_t naive_rank(Rows a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t r = rank;
    while (r < a.size() && a[r][c] == 0) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// d^e/dx_i^e by repeated first derivatives, term by term.
inline Polynomial differentiate_naive(const Polynomial& f, std::size_t var, unsigned times) {
  Polynomial g = f;
  for (unsigned t = 0; t < times; ++t) {
    Polynomial next(f.arity());
    for (const auto& [beta, c] : g.terms()) {
      if (beta[var] == 0) continue;
      MultiIndex lowered = beta;
      lowered[var] -= 1;
      next.add_term(lowered, c * Rational(beta[var]));
    }
    g = next;
  }
  return g;
}

inline Polynomial apply_naive(const Polynomial& p, const Polynomial& f) {
  Polynomial out(f.arity());
  for (const auto& [alpha, a] : p.terms()) {
    Polynomial g = f;
    for (std::size_t i = 0; i < alpha.arity(); ++i) g = differentiate_naive(g, i, alpha[i]);
    out += g * a;
  }
  return out;
}

// Coefficient rows of the images p(D) x^beta, |beta| <= k, as a
// (monomial x column) matrix with columns indexed by the image basis.
inline Rows operator_columns(const Polynomial& p, long k) {
  const auto basis = monomials_up_to(p.arity(), k);
  Rows rows(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
  std::map<MultiIndex, std::size_t> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Polynomial image = apply_naive(p, Polynomial::monomial(basis[c]));
    for (const auto& [alpha, v] : image.terms()) rows[where.at(alpha)][c] = v;
  }
  return rows;
}

inline std::size_t naive_kernel_dim(const Polynomial& p, long k) {
  const auto m = operator_columns(p, k);
  return m.size() - naive_rank(m);
}

// Rank of a family of polynomials (linear independence check).
inline std::size_t polynomial_rank(const std::vector<Polynomial>& family) {
  std::map<MultiIndex, std::size_t> where;
  for (const auto& f : family) {
    for (const auto& [alpha, c] : f.terms()) where.try_emplace(alpha, where.size());
  }
  Rows rows;
  for (const auto& f : family) {
    std::vector<Rational> row(where.size(), Rational(0));
    for (const auto& [alpha, c] : f.terms()) row[where.at(alpha)] = c;
    rows.push_back(std::move(row));
  }
  return naive_rank(rows);
}

}  // namespace poldif::reference
