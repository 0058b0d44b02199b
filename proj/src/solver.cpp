#include "poldif/solver.hpp"

#include "poldif/errors.hpp"

#include <string>

namespace poldif {

namespace {

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) {
    throw ArityMismatch("operator has arity " + std::to_string(a.arity()) +
                        ", polynomial has arity " + std::to_string(b.arity()));
  }
}

}  // namespace

LayerSystem build_layer_system(const Polynomial& p_hom, const Polynomial& q_hom, long m) {
  require_same_arity(p_hom, q_hom);
  if (p_hom.is_zero()) throw ZeroPolynomial("layer operator must be nonzero");
  if (!is_homogeneous(p_hom)) throw NotHomogeneous("layer operator is not homogeneous");
  if (!q_hom.is_zero() && (!is_homogeneous(q_hom) || degree(q_hom) != m)) {
    throw NotHomogeneous("right-hand side is not homogeneous of degree " + std::to_string(m));
  }

  const std::size_t k = p_hom.arity();
  const long n = degree(p_hom);

  LayerSystem sys;
  sys.row_labels = monomials_of_degree(k, m);
  sys.col_labels = monomials_of_degree(k, n + m);
  const auto rows = static_cast<Index>(sys.row_labels.size());
  const auto cols = static_cast<Index>(sys.col_labels.size());
  sys.matrix = RationalMatrix::Constant(rows, cols, Rational(0));
  sys.rhs = RationalVector::Constant(rows, Rational(0));

  for (Index r = 0; r < rows; ++r) {
    const MultiIndex& alpha0 = sys.row_labels[r];
    for (const auto& [alpha, a] : p_hom.terms()) {
      sys.matrix(r, static_cast<Index>(monomial_index_in_degree(alpha + alpha0))) = a;
    }
    sys.rhs(r) = Rational(alpha0.factorial()) * q_hom.coefficient(alpha0);
  }
  return sys;
}

LayerSystem build_layer_system(const Polynomial& p_hom, const Polynomial& q_hom) {
  return build_layer_system(p_hom, q_hom, degree(q_hom));
}

Polynomial solve_layer(const Polynomial& p_hom, const Polynomial& q_hom) {
  require_same_arity(p_hom, q_hom);
  if (p_hom.is_zero()) throw ZeroPolynomial("layer operator must be nonzero");
  if (!is_homogeneous(p_hom)) throw NotHomogeneous("layer operator is not homogeneous");
  if (!is_homogeneous(q_hom)) throw NotHomogeneous("layer right-hand side is not homogeneous");
  if (q_hom.is_zero()) return Polynomial(p_hom.arity());

  const LayerSystem sys = build_layer_system(p_hom, q_hom);
  AffineSolution sol;
  try {
    sol = solve_affine(sys.matrix, sys.rhs);
  } catch (const InconsistentSystem& e) {
    throw InternalDefect(std::string("homogeneous layer system reported inconsistent despite full row rank: ") +
                         e.what());
  }

  Polynomial f(p_hom.arity());
  for (std::size_t j = 0; j < sys.col_labels.size(); ++j) {
    const Rational& scaled = sol.particular(static_cast<Index>(j));
    if (scaled != 0) f.add_term(sys.col_labels[j], scaled / Rational(sys.col_labels[j].factorial()));
  }
  return f;
}

SolveOutcome solve_pde(const Polynomial& p, const Polynomial& q) {
  require_same_arity(p, q);
  if (p.is_zero()) throw ZeroOperator(q.is_zero());

  SolveOutcome out;
  out.zero_order = zero_order(p);
  out.rhs_degree = degree(q);
  out.ambient_degree = out.rhs_degree + out.zero_order;
  out.particular = Polynomial(p.arity());

  const Polynomial lowest = lower_layer(p);
  Polynomial remainder = q;
  // Each pass strips the top layer of the remainder, so this runs at most
  // deg(q) + 1 times.
  while (!remainder.is_zero()) {
    const long m = degree(remainder);
    const Polynomial top = solve_layer(lowest, layer(remainder, m));
    remainder -= apply_operator(p, top);
    if (degree(remainder) >= m) {
      throw DegreeDescentFailure("remainder degree " + std::to_string(degree(remainder)) +
                                 " did not drop below " + std::to_string(m));
    }
    out.particular += top;
  }
  return out;
}

Polynomial solve_unit(const Polynomial& p, const Polynomial& q) {
  require_same_arity(p, q);
  const Rational a00 = p.coefficient(MultiIndex(p.arity()));
  if (a00 == 0) throw ZeroConstantTerm("operator has zero constant term; no unique solution");

  Polynomial tail = p;
  tail.add_term(MultiIndex(p.arity()), -a00);
  tail *= Rational(1) / a00;

  // f = (1/a00) sum_j (-T)^j q; T lowers degree, so the sum terminates.
  Polynomial sum(q.arity());
  Polynomial term = q;
  while (!term.is_zero()) {
    sum += term;
    term = -apply_operator(tail, term);
  }
  return sum * (Rational(1) / a00);
}

RationalMatrix operator_matrix(const Polynomial& p, long k) {
  const std::vector<MultiIndex> basis = monomials_up_to(p.arity(), k);
  const auto n = static_cast<Index>(basis.size());
  RationalMatrix m = RationalMatrix::Constant(n, n, Rational(0));
  for (Index c = 0; c < n; ++c) {
    const Polynomial image = apply_operator(p, Polynomial::monomial(basis[c]));
    for (const auto& [alpha, coeff] : image.terms()) {
      m(static_cast<Index>(monomial_index(alpha)), c) = coeff;
    }
  }
  return m;
}

Polynomial from_coefficients(std::size_t arity, const std::vector<MultiIndex>& basis,
                             const RationalVector& coeffs) {
  Polynomial f(arity);
  for (std::size_t j = 0; j < basis.size(); ++j) f.add_term(basis[j], coeffs(static_cast<Index>(j)));
  return f;
}

std::vector<Polynomial> kernel_basis(const Polynomial& p, long k) {
  if (p.is_zero()) throw ZeroPolynomial("kernel of the zero operator is all of Pi_k");
  const std::vector<MultiIndex> basis = monomials_up_to(p.arity(), k);
  std::vector<Polynomial> out;
  for (const RationalVector& v : nullspace(operator_matrix(p, k))) {
    out.push_back(from_coefficients(p.arity(), basis, v));
  }
  return out;
}

BigInt kernel_dim(long s, long k) {
  BigInt total = 0;
  for (long j = 0; j <= k; ++j) total += std::min(j + 1, s);
  return total;
}

BigInt sigma_free(long n, long m, long k) {
  return binomial(n + m + k - 1, k - 1) - binomial(m + k - 1, k - 1);
}

BigInt dim_pi(long n, long k) {
  if (n < 0) return 0;
  return binomial(n + k, k);
}

BigInt dim_hom(long n, long k) {
  if (n < 0) return 0;
  return binomial(n + k - 1, k - 1);
}

SolveOutcome solution_family(const Polynomial& p, const Polynomial& q, long k) {
  require_same_arity(p, q);
  if (p.is_zero()) throw ZeroOperator(q.is_zero());
  // For q = 0 the particular solution is 0, which lies in every Pi_k.
  const long minimal = q.is_zero() ? 0 : degree(q) + zero_order(p);
  if (k < minimal) {
    throw AmbientTooSmall("ambient degree " + std::to_string(k) + " is below deg(q) + s = " +
                          std::to_string(minimal));
  }
  SolveOutcome out = solve_pde(p, q);
  out.kernel_basis = kernel_basis(p, k);
  out.free_count = static_cast<long>(out.kernel_basis.size());
  out.ambient_degree = k;
  return out;
}

std::optional<Polynomial> oracle_solve(const Polynomial& p, const Polynomial& q, long k) {
  require_same_arity(p, q);
  if (p.is_zero()) throw ZeroOperator(q.is_zero());
  if (degree(q) > k) return std::nullopt;

  const std::vector<MultiIndex> basis = monomials_up_to(p.arity(), k);
  RationalVector rhs(static_cast<Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) rhs(static_cast<Index>(i)) = q.coefficient(basis[i]);
  try {
    const AffineSolution sol = solve_affine(operator_matrix(p, k), rhs);
    return from_coefficients(p.arity(), basis, sol.particular);
  } catch (const InconsistentSystem&) {
    return std::nullopt;
  }
}

Polynomial verify(const Polynomial& p, const Polynomial& f, const Polynomial& q) {
  require_same_arity(p, f);
  require_same_arity(p, q);
  return q - apply_operator(p, f);
}

}  // namespace poldif
