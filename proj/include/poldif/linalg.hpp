#pragma once

// Exact linear algebra over Q on dense Eigen matrices.
//
// Elimination is fraction-free (Bareiss) over big integers followed by a
// single division pass into reduced row-echelon form. Pivots are chosen by
// position only: columns are scanned left to right and the first remaining
// row with a nonzero entry in that column becomes the pivot row.

#include "poldif/rational.hpp"

#include <Eigen/Core>

#include <vector>

namespace poldif {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntegerMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

/// Fraction-free row echelon form of an integer matrix, in place. Only the
/// first `pivot_cols` columns are eligible as pivots; trailing columns (an
/// augmented right-hand side) are carried along. Returns the pivot columns;
/// their count is the rank and rows [0, rank) are the pivot rows.
template <typename Derived>
std::vector<Index> bareiss_echelon(Eigen::MatrixBase<Derived>& a, Index pivot_cols) {
  using Scalar = typename Derived::Scalar;
  std::vector<Index> pivots;
  Scalar previous(1);
  Index row = 0;
  for (Index col = 0; col < pivot_cols && row < a.rows(); ++col) {
    Index found = row;
    while (found < a.rows() && a(found, col) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != row) a.row(found).swap(a.row(row));

    const Scalar pivot = a(row, col);
    for (Index i = row + 1; i < a.rows(); ++i) {
      const Scalar lead = a(i, col);
      for (Index j = col + 1; j < a.cols(); ++j) {
        // Exact: every entry produced here is a minor of the input.
        a(i, j) = (pivot * a(i, j) - lead * a(row, j)) / previous;
      }
      a(i, col) = 0;
    }
    previous = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

struct Elimination {
  RationalMatrix reduced;  ///< reduced row-echelon form, same shape as input
  Index rank = 0;
  std::vector<Index> pivot_columns;
  std::vector<Index> free_columns;
};

Elimination eliminate(const RationalMatrix& m);

/// Particular solution plus nullspace basis of M x = b.
///
/// Free variables are zero in `particular`. The nullspace has one vector per
/// free column: that column set to 1, the other free columns 0, pivots
/// back-substituted.
struct AffineSolution {
  RationalVector particular;
  std::vector<RationalVector> nullspace_basis;
  std::vector<Index> pivot_columns;
  std::vector<Index> free_columns;
};

/// Throws InconsistentSystem when b is outside the column space of M and
/// ArityMismatch when b.size() != M.rows().
AffineSolution solve_affine(const RationalMatrix& m, const RationalVector& b);

Index rank(const RationalMatrix& m);

std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// True when every entry is exactly zero.
template <typename Derived>
bool is_exact_zero(const Eigen::MatrixBase<Derived>& a) {
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace poldif
