#pragma once

// Polynomial solutions of constant-coefficient PDEs p(D) f = q.
//
// solve_pde peels q one homogeneous layer at a time: the top layer of q is
// matched against the lowest layer of p by an exact homogeneous solve, the
// result is subtracted through the full operator and the strictly
// lower-degree remainder is solved recursively. The particular solution has
// degree at most deg(q) + s where s is the zero order of p at the origin.

#include "poldif/linalg.hpp"
#include "poldif/multi_index.hpp"
#include "poldif/polynomial.hpp"

#include <optional>
#include <vector>

namespace poldif {

/// Linear system for the homogeneous equation p(D) f = q with p of degree n
/// and q of degree m, in the scaled unknowns gamma'_beta = beta! gamma_beta.
///
/// Row alpha0 (|alpha0| = m) holds the coefficients of x^alpha0 p(x) on the
/// degree n+m monomials, so entry (alpha0, beta) is a_{beta - alpha0} when
/// alpha0 <= beta and 0 otherwise. The right-hand side is alpha0! b_alpha0.
struct LayerSystem {
  RationalMatrix matrix;
  RationalVector rhs;
  std::vector<MultiIndex> row_labels;
  std::vector<MultiIndex> col_labels;
};

/// q_hom must be zero or homogeneous of degree m. Throws NotHomogeneous,
/// ZeroPolynomial (p_hom = 0) or ArityMismatch.
LayerSystem build_layer_system(const Polynomial& p_hom, const Polynomial& q_hom, long m);
LayerSystem build_layer_system(const Polynomial& p_hom, const Polynomial& q_hom);

/// Homogeneous f of degree deg(p_hom) + deg(q_hom) with p_hom(D) f = q_hom.
/// Free scaled unknowns are fixed to 0. Returns 0 for q_hom = 0.
Polynomial solve_layer(const Polynomial& p_hom, const Polynomial& q_hom);

struct SolveOutcome {
  Polynomial particular;
  std::vector<Polynomial> kernel_basis;
  long free_count = 0;
  long zero_order = 0;
  long rhs_degree = -1;
  long ambient_degree = -1;

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;
};

/// Particular solution of degree <= deg(q) + zero_order(p); kernel basis is
/// left empty and ambient_degree = deg(q) + zero_order(p).
/// Throws ZeroOperator for p = 0, ArityMismatch, and DegreeDescentFailure if
/// a peeling step fails to lower the degree of the remainder.
SolveOutcome solve_pde(const Polynomial& p, const Polynomial& q);

/// The unique solution in Pi_m for p with nonzero constant term a00,
/// computed as sum_j (-T)^j q / a00 with T = (p - a00)(D) / a00.
/// Throws ZeroConstantTerm.
Polynomial solve_unit(const Polynomial& p, const Polynomial& q);

/// Matrix of p(D) : Pi_k -> Pi_k in the graded monomial basis
/// (monomials_up_to(arity, k) for both rows and columns).
RationalMatrix operator_matrix(const Polynomial& p, long k);

/// Basis of { f in Pi_k : p(D) f = 0 }. Throws ZeroPolynomial.
std::vector<Polynomial> kernel_basis(const Polynomial& p, long k);

/// Dimension of the kernel of p(D) on bivariate Pi_k when the origin is an
/// s-fold zero of p: sum_{j=0..k} min(j + 1, s).
BigInt kernel_dim(long s, long k);

/// Free unknowns of the layer system: C(n+m+k-1, k-1) - C(m+k-1, k-1).
BigInt sigma_free(long n, long m, long k);

/// dim Pi_n in k variables, C(n+k, k); 0 for n = -1.
BigInt dim_pi(long n, long k);
/// dim of homogeneous degree-n polynomials in k variables, C(n+k-1, k-1).
BigInt dim_hom(long n, long k);

/// Particular solution plus kernel basis in Pi_k. Requires
/// k >= deg(q) + zero_order(p) (k >= 0 when q = 0), else AmbientTooSmall.
SolveOutcome solution_family(const Polynomial& p, const Polynomial& q, long k);

/// Brute force: solve the dense system of p(D) on Pi_k directly, with no
/// use of layer structure. std::nullopt when no solution lies in Pi_k.
std::optional<Polynomial> oracle_solve(const Polynomial& p, const Polynomial& q, long k);

/// q - p(D) f.
Polynomial verify(const Polynomial& p, const Polynomial& f, const Polynomial& q);

/// Polynomial with coefficient vector `coeffs` over `basis`.
Polynomial from_coefficients(std::size_t arity, const std::vector<MultiIndex>& basis,
                             const RationalVector& coeffs);

}  // namespace poldif
