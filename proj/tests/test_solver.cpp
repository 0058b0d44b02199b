#include "poldif/errors.hpp"
#include "poldif/expr.hpp"
#include "poldif/random_instances.hpp"
#include "poldif/solver.hpp"

#include "naive_oracle.hpp"

#include <gtest/gtest.h>

using namespace poldif;

namespace {

Polynomial P(const char* text) { return parse(text, VariableSet::default_set()); }

// Same span: equal rank and the union adds nothing.
bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto ra = reference::polynomial_rank(a);
  return ra == a.size() && ra == reference::polynomial_rank(b) && ra == reference::polynomial_rank(both);
}

}  // namespace

// --- solve_layer -----------------------------------------------------------

TEST(SolveLayerTest, SumOperator) {
  // (dx + dy) x^2/2 = x; free unknown gamma_{y^2} = 0 forces gamma_{xy} = 0.
  const Polynomial f = solve_layer(P("x + y"), P("x"));
  EXPECT_EQ(reference::apply_naive(P("x + y"), f), P("x"));
  EXPECT_EQ(f, P("1/2*x^2"));
}

TEST(SolveLayerTest, MixedPartial) {
  const Polynomial f = solve_layer(P("x*y"), P("1"));
  EXPECT_EQ(reference::apply_naive(P("x*y"), f), P("1"));
  EXPECT_EQ(f, P("x*y"));
}

TEST(SolveLayerTest, ZeroRhs) {
  EXPECT_TRUE(solve_layer(P("x^2 - 3*x*y"), Polynomial(2)).is_zero());
}

TEST(SolveLayerTest, Errors) {
  EXPECT_THROW(solve_layer(P("1 + x"), P("x")), NotHomogeneous);
  EXPECT_THROW(solve_layer(P("x"), P("x + 1")), NotHomogeneous);
  EXPECT_THROW(solve_layer(Polynomial(2), P("x")), ZeroPolynomial);
  EXPECT_THROW(solve_layer(P("x"), Polynomial(3)), ArityMismatch);
}

TEST(LayerSystemTest, RowsAreShiftedOperator) {
  Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    const auto k = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    const long n = uniform_int(rng, 0, 3);
    const long m = uniform_int(rng, 0, 3);
    const Polynomial p = random_homogeneous(rng, k, n);
    const LayerSystem sys = build_layer_system(p, Polynomial(k), m);
    ASSERT_EQ(sys.matrix.rows(), static_cast<Index>(dim_hom(m, static_cast<long>(k))));
    ASSERT_EQ(sys.matrix.cols(), static_cast<Index>(dim_hom(n + m, static_cast<long>(k))));
    for (Index r = 0; r < sys.matrix.rows(); ++r) {
      const Polynomial shifted = multiply(Polynomial::monomial(sys.row_labels[r]), p);
      for (Index c = 0; c < sys.matrix.cols(); ++c) {
        EXPECT_EQ(sys.matrix(r, c), shifted.coefficient(sys.col_labels[c]));
      }
    }
  }
}

TEST(LayerSystemTest, FullRowRankAndFreeCount) {
  Rng rng(32);
  for (int it = 0; it < 100; ++it) {
    const auto k = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    const long n = uniform_int(rng, 0, 4);
    const long m = uniform_int(rng, 0, 3);
    const LayerSystem sys = build_layer_system(random_homogeneous(rng, k, n), Polynomial(k), m);
    reference::Rows rows(static_cast<std::size_t>(sys.matrix.rows()));
    for (Index r = 0; r < sys.matrix.rows(); ++r)
      for (Index c = 0; c < sys.matrix.cols(); ++c) rows[r].push_back(sys.matrix(r, c));
    EXPECT_EQ(BigInt(reference::naive_rank(rows)), dim_hom(m, static_cast<long>(k)));
    EXPECT_EQ(BigInt(eliminate(sys.matrix).free_columns.size()), sigma_free(n, m, static_cast<long>(k)));
  }
}

TEST(LayerSystemTest, RhsIsScaledByFactorial) {
  const LayerSystem sys = build_layer_system(P("x"), P("3*x^2 + x*y"));
  ASSERT_EQ(sys.row_labels.size(), 3u);
  EXPECT_EQ(sys.rhs(0), 6);  // 2! * 3
  EXPECT_EQ(sys.rhs(1), 1);  // 1!1! * 1
  EXPECT_EQ(sys.rhs(2), 0);
}

// --- solve_pde -------------------------------------------------------------

TEST(SolvePdeTest, UnitOperator) {
  const SolveOutcome out = solve_pde(P("1 + x"), P("x"));
  EXPECT_EQ(reference::apply_naive(P("1 + x"), out.particular), P("x"));
  EXPECT_EQ(out.particular, P("x - 1"));
  EXPECT_EQ(out.zero_order, 0);
  EXPECT_EQ(out.rhs_degree, 1);
  EXPECT_EQ(out.ambient_degree, 1);
  EXPECT_EQ(out.particular, solve_unit(P("1 + x"), P("x")));
}

TEST(SolvePdeTest, Laplacian) {
  const SolveOutcome out = solve_pde(P("x^2 + y^2"), P("1"));
  EXPECT_EQ(reference::apply_naive(P("x^2 + y^2"), out.particular), P("1"));
  // Graded-lex pivoting picks the x^2 column; the symmetric solution also works.
  EXPECT_EQ(out.particular, P("1/2*x^2"));
  EXPECT_TRUE(verify(P("x^2 + y^2"), P("1/4*x^2 + 1/4*y^2"), P("1")).is_zero());
  EXPECT_TRUE(apply_operator(P("x^2 + y^2"), out.particular - P("1/4*(x^2 + y^2)")).is_zero());
}

TEST(SolvePdeTest, ZeroRhs) {
  const SolveOutcome out = solve_pde(P("x*y + x^3"), Polynomial(2));
  EXPECT_TRUE(out.particular.is_zero());
  EXPECT_EQ(out.rhs_degree, -1);
  EXPECT_LE(degree(out.particular), out.rhs_degree + out.zero_order);
}

TEST(SolvePdeTest, Errors) {
  try {
    solve_pde(Polynomial(2), P("x"));
    FAIL() << "expected ZeroOperator";
  } catch (const ZeroOperator& e) {
    EXPECT_FALSE(e.rhs_is_zero());
  }
  try {
    solve_pde(Polynomial(2), Polynomial(2));
    FAIL() << "expected ZeroOperator";
  } catch (const ZeroOperator& e) {
    EXPECT_TRUE(e.rhs_is_zero());
  }
  EXPECT_THROW(solve_pde(P("x"), Polynomial(3)), ArityMismatch);
}

TEST(SolvePdeProperties, ResidualAndDegreeBound) {
  Rng rng(41);
  for (int it = 0; it < 150; ++it) {
    const PdeInstance inst = random_pde_instance(rng);
    const SolveOutcome out = solve_pde(inst.p, inst.q);
    EXPECT_TRUE(verify(inst.p, out.particular, inst.q).is_zero());
    EXPECT_EQ(reference::apply_naive(inst.p, out.particular), inst.q);
    EXPECT_LE(degree(out.particular), degree(inst.q) + zero_order(inst.p));
  }
}

TEST(SolvePdeProperties, HomogeneousInputsMatchLayerSolve) {
  Rng rng(42);
  for (int it = 0; it < 100; ++it) {
    const auto k = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const Polynomial p = random_homogeneous(rng, k, uniform_int(rng, 1, 3));
    const Polynomial q = random_homogeneous(rng, k, uniform_int(rng, 0, 3));
    const Polynomial f = solve_pde(p, q).particular;
    EXPECT_TRUE(is_homogeneous(f));
    EXPECT_EQ(f, solve_layer(p, q));
    EXPECT_EQ(apply_operator(p, upper_layer(f)), q);
  }
}

// --- solve_unit ------------------------------------------------------------

TEST(SolveUnitTest, Examples) {
  EXPECT_EQ(solve_unit(P("1"), P("3*x*y - y^4 + 2")), P("3*x*y - y^4 + 2"));

  // (1 + dx)(x^2 - 2x + 2) = x^2
  const Polynomial f = solve_unit(P("1 + x"), P("x^2"));
  EXPECT_EQ(reference::apply_naive(P("1 + x"), f), P("x^2"));
  EXPECT_EQ(f, P("x^2 - 2*x + 2"));

  const Polynomial g = solve_unit(P("2 + x*y"), P("y"));
  EXPECT_EQ(reference::apply_naive(P("2 + x*y"), g), P("y"));
  EXPECT_EQ(g, P("1/2*y"));
}

TEST(SolveUnitTest, RequiresConstantTerm) {
  EXPECT_THROW(solve_unit(P("x + y"), P("1")), ZeroConstantTerm);
}

TEST(SolveUnitProperties, AgreesWithLayerPeelingAndOracle) {
  Rng rng(43);
  for (int it = 0; it < 100; ++it) {
    const auto k = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const Polynomial p = random_operator(rng, k, 0, 4);
    RandomPolynomialOptions opts;
    opts.max_degree = uniform_int(rng, 0, 4);
    const Polynomial q = random_polynomial(rng, k, opts);
    const Polynomial f = solve_unit(p, q);
    EXPECT_EQ(f, solve_pde(p, q).particular);
    const long m = std::max(0L, degree(q));
    for (long extra : {0L, 2L}) {
      const auto brute = oracle_solve(p, q, m + extra);
      ASSERT_TRUE(brute.has_value());
      EXPECT_EQ(*brute, f);
    }
  }
}

// --- kernel ----------------------------------------------------------------

TEST(KernelTest, UnitOperatorHasTrivialKernel) {
  for (long k = 0; k <= 4; ++k) EXPECT_TRUE(kernel_basis(P("1 + x"), k).empty());
}

TEST(KernelTest, PartialX) {
  const auto basis = kernel_basis(P("x"), 2);
  EXPECT_EQ(basis.size(), 3u);
  EXPECT_TRUE(same_span(basis, {P("1"), P("y"), P("y^2")}));
}

TEST(KernelTest, MixedPartial) {
  const auto basis = kernel_basis(P("x*y"), 1);
  EXPECT_EQ(basis.size(), 3u);
  EXPECT_TRUE(same_span(basis, {P("1"), P("x"), P("y")}));
}

TEST(KernelTest, ZeroOperator) { EXPECT_THROW(kernel_basis(Polynomial(2), 2), ZeroPolynomial); }

TEST(KernelProperties, AnnihilatedIndependentAndClosed) {
  Rng rng(44);
  for (int it = 0; it < 60; ++it) {
    const auto arity = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const long s = uniform_int(rng, 0, 3);
    const long k = uniform_int(rng, 0, 4);
    const Polynomial p = random_operator(rng, arity, s, s + 2);
    const auto basis = kernel_basis(p, k);
    EXPECT_EQ(reference::polynomial_rank(basis), basis.size());
    EXPECT_EQ(basis.size(), reference::naive_kernel_dim(p, k));
    // All solutions in Pi_k: dim Pi_k - dim Pi_{k-s}, as p(D) maps onto Pi_{k-s}.
    EXPECT_EQ(BigInt(basis.size()), dim_pi(k, static_cast<long>(arity)) -
                                        dim_pi(k - s, static_cast<long>(arity)));
    for (const auto& g : basis) {
      EXPECT_LE(degree(g), k);
      EXPECT_TRUE(apply_operator(p, g).is_zero());
      for (std::size_t v = 0; v < arity; ++v) EXPECT_TRUE(apply_operator(p, derivative(g, v)).is_zero());
    }
  }
}

// --- dimension formulas ----------------------------------------------------

TEST(KernelDimTest, Examples) {
  for (long k = 0; k <= 6; ++k) EXPECT_EQ(kernel_dim(0, k), 0);
  EXPECT_EQ(kernel_dim(1, 3), 4);
  EXPECT_EQ(kernel_dim(2, 2), 5);
  EXPECT_EQ(kernel_dim(1, 3), BigInt(reference::naive_kernel_dim(P("x"), 3)));
  EXPECT_EQ(kernel_dim(2, 2), BigInt(reference::naive_kernel_dim(P("x*y"), 2)));
}

TEST(KernelDimTest, ClosedFormBeyondTransient) {
  for (long s = 0; s <= 6; ++s) {
    for (long k = std::max(0L, s - 1); k <= 12; ++k) {
      EXPECT_EQ(2 * kernel_dim(s, k), BigInt(s * (2 * k - s + 3)));
    }
  }
}

TEST(SigmaFreeTest, Examples) {
  for (long n = 0; n <= 6; ++n)
    for (long m = 0; m <= 6; ++m) EXPECT_EQ(sigma_free(n, m, 2), n);
  EXPECT_EQ(sigma_free(1, 1, 3), 3);
  for (long m = 0; m <= 4; ++m)
    for (long k = 1; k <= 4; ++k) EXPECT_EQ(sigma_free(0, m, k), 0);
}

TEST(DimTest, Examples) {
  for (long n = 0; n <= 10; ++n) {
    EXPECT_EQ(2 * dim_pi(n, 2), BigInt((n + 1) * (n + 2)));
    EXPECT_EQ(dim_hom(n, 2), n + 1);
  }
  EXPECT_EQ(dim_pi(-1, 3), 0);
  EXPECT_EQ(dim_pi(3, 3), 20);
  EXPECT_EQ(dim_hom(2, 3), 6);
}

// --- solution family -------------------------------------------------------

TEST(SolutionFamilyTest, Examples) {
  const SolveOutcome a = solution_family(P("1 + x"), P("x"), 5);
  EXPECT_EQ(a.particular, P("x - 1"));
  EXPECT_TRUE(a.kernel_basis.empty());
  EXPECT_EQ(a.free_count, 0);
  EXPECT_EQ(a.ambient_degree, 5);

  const SolveOutcome b = solution_family(P("x"), P("1"), 1);
  EXPECT_EQ(b.particular, P("x"));
  EXPECT_EQ(b.free_count, 2);
  EXPECT_TRUE(same_span(b.kernel_basis, {P("1"), P("y")}));

  const SolveOutcome c = solution_family(P("x*y"), Polynomial(2), 0);
  EXPECT_TRUE(c.particular.is_zero());
  EXPECT_EQ(c.free_count, 1);
  EXPECT_TRUE(same_span(c.kernel_basis, {P("1")}));
}

TEST(SolutionFamilyTest, Errors) {
  EXPECT_THROW(solution_family(P("x*y"), P("x"), 2), AmbientTooSmall);
  EXPECT_THROW(solution_family(Polynomial(2), P("x"), 2), ZeroOperator);
}

TEST(SolutionFamilyProperties, EveryMemberSolves) {
  Rng rng(45);
  for (int it = 0; it < 40; ++it) {
    PdeInstanceOptions opts;
    opts.max_operator_degree = 3;
    opts.max_rhs_degree = 2;
    const PdeInstance inst = random_pde_instance(rng, opts);
    const long k = degree(inst.q) + zero_order(inst.p) + uniform_int(rng, 0, 2);
    const SolveOutcome out = solution_family(inst.p, inst.q, k);
    EXPECT_EQ(out.free_count, static_cast<long>(out.kernel_basis.size()));
    Polynomial member = out.particular;
    for (const auto& g : out.kernel_basis) member += g * Rational(uniform_int(rng, -5, 5), uniform_int(rng, 1, 3));
    EXPECT_TRUE(verify(inst.p, member, inst.q).is_zero());
  }
}

// --- oracle and verify -----------------------------------------------------

TEST(OracleTest, Examples) {
  const auto lap = oracle_solve(P("x^2 + y^2"), P("1"), 2);
  ASSERT_TRUE(lap.has_value());
  EXPECT_TRUE(verify(P("x^2 + y^2"), *lap, P("1")).is_zero());
  EXPECT_EQ(*lap, P("1/2*x^2"));

  EXPECT_EQ(oracle_solve(P("1 + x"), P("x"), 1), P("x - 1"));
  EXPECT_FALSE(oracle_solve(P("x"), P("1"), 0).has_value());
  EXPECT_FALSE(oracle_solve(P("x"), P("x^3"), 2).has_value());
}

TEST(OracleProperties, DifferenceOfSolutionsIsInKernel) {
  Rng rng(46);
  for (int it = 0; it < 100; ++it) {
    const PdeInstance inst = random_pde_instance(rng);
    const long bound = degree(inst.q) + zero_order(inst.p);
    const Polynomial f = solve_pde(inst.p, inst.q).particular;
    const auto brute = oracle_solve(inst.p, inst.q, bound);
    ASSERT_TRUE(brute.has_value());
    EXPECT_TRUE(apply_operator(inst.p, f - *brute).is_zero());
  }
}

TEST(VerifyTest, Examples) {
  EXPECT_TRUE(verify(P("1 + x"), P("x - 1"), P("x")).is_zero());
  EXPECT_EQ(verify(P("x"), P("1"), P("1")), P("1"));
  EXPECT_TRUE(verify(P("x^2 - y"), Polynomial(2), Polynomial(2)).is_zero());
  EXPECT_THROW(verify(P("x"), Polynomial(3), Polynomial(2)), ArityMismatch);
}
