#include "poldif/random_instances.hpp"

#include <algorithm>

namespace poldif {

namespace {

Rational random_nonzero(Rng& rng, long bound) {
  long v = uniform_int(rng, 1, bound);
  return uniform_int(rng, 0, 1) == 0 ? Rational(v) : Rational(-v);
}

// Forces a nonzero term somewhere in the given degree.
void ensure_layer(Rng& rng, Polynomial& p, long degree, long bound) {
  if (!layer(p, degree).is_zero()) return;
  const auto monomials = monomials_of_degree(p.arity(), degree);
  const auto pick = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(monomials.size()) - 1));
  p.add_term(monomials[pick], random_nonzero(rng, bound));
}

}  // namespace

long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Polynomial random_polynomial(Rng& rng, std::size_t arity, const RandomPolynomialOptions& opts) {
  Polynomial p(arity);
  std::bernoulli_distribution keep(opts.density);
  for (long d = std::max(0L, opts.min_degree); d <= opts.max_degree; ++d) {
    for (const MultiIndex& alpha : monomials_of_degree(arity, d)) {
      if (!keep(rng)) continue;
      p.add_term(alpha, Rational(uniform_int(rng, -opts.coefficient_bound, opts.coefficient_bound)));
    }
  }
  return p;
}

Polynomial random_operator(Rng& rng, std::size_t arity, long zero_order, long max_degree,
                           long coefficient_bound) {
  RandomPolynomialOptions opts;
  opts.min_degree = zero_order;
  opts.max_degree = std::max(max_degree, zero_order);
  opts.coefficient_bound = coefficient_bound;
  Polynomial p = random_polynomial(rng, arity, opts);
  ensure_layer(rng, p, zero_order, coefficient_bound);
  return p;
}

Polynomial random_homogeneous(Rng& rng, std::size_t arity, long degree, long coefficient_bound) {
  RandomPolynomialOptions opts;
  opts.min_degree = degree;
  opts.max_degree = degree;
  opts.coefficient_bound = coefficient_bound;
  Polynomial p = random_polynomial(rng, arity, opts);
  ensure_layer(rng, p, degree, coefficient_bound);
  return p;
}

}  // namespace poldif

namespace poldif {

PdeInstance random_pde_instance(Rng& rng, const PdeInstanceOptions& opts) {
  const auto arity = static_cast<std::size_t>(
      uniform_int(rng, static_cast<long>(opts.min_arity), static_cast<long>(opts.max_arity)));
  const long s = uniform_int(rng, 0, opts.max_zero_order);
  const long p_degree = uniform_int(rng, s, std::max(s, opts.max_operator_degree));
  const long q_degree = uniform_int(rng, 0, opts.max_rhs_degree);

  PdeInstance inst{random_operator(rng, arity, s, p_degree, opts.coefficient_bound), Polynomial(arity)};
  RandomPolynomialOptions q_opts;
  q_opts.max_degree = q_degree - 1;
  q_opts.coefficient_bound = opts.coefficient_bound;
  inst.q = random_polynomial(rng, arity, q_opts) +
           random_homogeneous(rng, arity, q_degree, opts.coefficient_bound);
  return inst;
}

}  // namespace poldif
