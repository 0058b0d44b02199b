#pragma once

// Seeded random polynomial generators shared by the self-test command and
// the test suites. Integer coefficients are drawn from [-bound, bound].

#include "poldif/polynomial.hpp"

#include <cstddef>
#include <random>

namespace poldif {

using Rng = std::mt19937_64;

struct RandomPolynomialOptions {
  long min_degree = 0;
  long max_degree = 3;
  long coefficient_bound = 9;
  /// Probability that a monomial in range receives a (possibly zero) draw.
  double density = 0.5;
};

long uniform_int(Rng& rng, long lo, long hi);

/// Terms only in degrees [min_degree, max_degree]; may be zero.
Polynomial random_polynomial(Rng& rng, std::size_t arity, const RandomPolynomialOptions& opts);

/// Operator whose lowest nonzero layer is exactly `zero_order`; degree at
/// most max(max_degree, zero_order).
Polynomial random_operator(Rng& rng, std::size_t arity, long zero_order, long max_degree,
                           long coefficient_bound = 9);

/// Nonzero homogeneous polynomial of the given degree.
Polynomial random_homogeneous(Rng& rng, std::size_t arity, long degree, long coefficient_bound = 9);

}  // namespace poldif

namespace poldif {

struct PdeInstance {
  Polynomial p;
  Polynomial q;
};

struct PdeInstanceOptions {
  std::size_t min_arity = 2;
  std::size_t max_arity = 3;
  long max_zero_order = 3;
  long max_operator_degree = 5;
  long max_rhs_degree = 4;
  long coefficient_bound = 9;
};

/// p with a random prescribed zero order s <= max_zero_order and degree in
/// [s, max(s, max_operator_degree)]; q nonzero of random degree <= max_rhs_degree.
PdeInstance random_pde_instance(Rng& rng, const PdeInstanceOptions& opts = {});

}  // namespace poldif
