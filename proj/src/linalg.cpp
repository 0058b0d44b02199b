#include "poldif/linalg.hpp"

#include "poldif/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <string>

namespace poldif {

namespace {

// Scale every row of [m | extra] to integers. Row scaling by a nonzero
// constant leaves the solution set untouched.
IntegerMatrix clear_denominators(const RationalMatrix& m, const RationalVector* rhs) {
  const Index cols = m.cols() + (rhs ? 1 : 0);
  IntegerMatrix out(m.rows(), cols);
  for (Index i = 0; i < m.rows(); ++i) {
    BigInt lcm = 1;
    for (Index j = 0; j < m.cols(); ++j) lcm = boost::multiprecision::lcm(lcm, denominator_of(m(i, j)));
    if (rhs) lcm = boost::multiprecision::lcm(lcm, denominator_of((*rhs)(i)));
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = numerator_of(m(i, j)) * (lcm / denominator_of(m(i, j)));
    }
    if (rhs) out(i, m.cols()) = numerator_of((*rhs)(i)) * (lcm / denominator_of((*rhs)(i)));
  }
  return out;
}

// Division pass: turn the top `rank` rows of a fraction-free echelon form
// into reduced row-echelon form over Q.
RationalMatrix reduce(const IntegerMatrix& echelon, const std::vector<Index>& pivots) {
  RationalMatrix r = echelon.cast<Rational>();
  const Index rank = static_cast<Index>(pivots.size());
  for (Index i = rank - 1; i >= 0; --i) {
    const Index pc = pivots[i];
    const Rational inv = Rational(1) / r(i, pc);
    for (Index j = pc; j < r.cols(); ++j) r(i, j) *= inv;
    for (Index above = 0; above < i; ++above) {
      const Rational factor = r(above, pc);
      if (factor == 0) continue;
      for (Index j = pc; j < r.cols(); ++j) r(above, j) -= factor * r(i, j);
    }
  }
  for (Index i = rank; i < r.rows(); ++i) r.row(i).setConstant(Rational(0));
  return r;
}

std::vector<Index> complement(const std::vector<Index>& pivots, Index cols) {
  std::vector<Index> free;
  std::size_t next = 0;
  for (Index c = 0; c < cols; ++c) {
    if (next < pivots.size() && pivots[next] == c) {
      ++next;
    } else {
      free.push_back(c);
    }
  }
  return free;
}

std::vector<RationalVector> nullspace_from(const RationalMatrix& reduced,
                                           const std::vector<Index>& pivots,
                                           const std::vector<Index>& free, Index cols) {
  std::vector<RationalVector> basis;
  basis.reserve(free.size());
  for (Index f : free) {
    RationalVector v = RationalVector::Constant(cols, Rational(0));
    v(f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -reduced(static_cast<Index>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Elimination eliminate(const RationalMatrix& m) {
  IntegerMatrix a = clear_denominators(m, nullptr);
  Elimination out;
  out.pivot_columns = bareiss_echelon(a, a.cols());
  out.rank = static_cast<Index>(out.pivot_columns.size());
  out.free_columns = complement(out.pivot_columns, m.cols());
  out.reduced = reduce(a, out.pivot_columns);
  return out;
}

AffineSolution solve_affine(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) {
    throw ArityMismatch("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                        std::to_string(m.rows()) + " rows");
  }
  IntegerMatrix a = clear_denominators(m, &b);
  const Index cols = m.cols();
  const std::vector<Index> pivots = bareiss_echelon(a, cols);
  const Index rank = static_cast<Index>(pivots.size());
  for (Index i = rank; i < a.rows(); ++i) {
    if (a(i, cols) != 0) {
      throw InconsistentSystem("inconsistent linear system: rank " + std::to_string(rank) +
                               " but the augmented matrix has larger rank");
    }
  }
  const RationalMatrix reduced = reduce(a, pivots);

  AffineSolution out;
  out.pivot_columns = pivots;
  out.free_columns = complement(pivots, cols);
  out.particular = RationalVector::Constant(cols, Rational(0));
  for (Index r = 0; r < rank; ++r) out.particular(pivots[r]) = reduced(r, cols);
  out.nullspace_basis = nullspace_from(reduced, pivots, out.free_columns, cols);
  return out;
}

Index rank(const RationalMatrix& m) {
  IntegerMatrix a = clear_denominators(m, nullptr);
  return static_cast<Index>(bareiss_echelon(a, a.cols()).size());
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const Elimination e = eliminate(m);
  return nullspace_from(e.reduced, e.pivot_columns, e.free_columns, m.cols());
}

}  // namespace poldif
