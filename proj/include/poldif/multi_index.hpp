#pragma once

#include "poldif/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace poldif {

/// Exponent vector alpha of fixed arity. Indexes both the monomial x^alpha
/// and the derivative D^alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t arity) : exponents_(arity, 0) {}
  MultiIndex(std::initializer_list<unsigned> exponents) : exponents_(exponents) {}
  explicit MultiIndex(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

  static MultiIndex unit(std::size_t arity, std::size_t variable);

  std::size_t arity() const { return exponents_.size(); }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  unsigned& operator[](std::size_t i) { return exponents_[i]; }
  const std::vector<unsigned>& exponents() const { return exponents_; }

  /// |alpha|
  long total_degree() const;

  /// alpha! = prod alpha_i!
  BigInt factorial() const;

  /// Componentwise alpha <= other.
  bool divides(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Requires other.divides(*this).
  MultiIndex operator-(const MultiIndex& other) const;

  // Plain lexicographic comparison of the exponent vectors.
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> exponents_;
};

/// Term order used for printing and for polynomial term maps: higher total
/// degree first, then lexicographically larger first (x^2 > xy > y^2 > x).
struct GradedLexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Monomials with |alpha| == degree, in matrix-index order:
/// lexicographically largest first, so arity 2 degree 1 gives [(1,0), (0,1)].
std::vector<MultiIndex> monomials_of_degree(std::size_t arity, long degree);

/// Monomials with |alpha| <= degree in matrix-index order: by degree
/// ascending, each degree block ordered as in monomials_of_degree.
/// Empty for degree < 0.
std::vector<MultiIndex> monomials_up_to(std::size_t arity, long degree);

/// Position of alpha in monomials_up_to(arity, |alpha|) (and hence in any
/// longer enumeration).
std::size_t monomial_index(const MultiIndex& alpha);

/// Position of alpha within monomials_of_degree(arity, |alpha|).
std::size_t monomial_index_in_degree(const MultiIndex& alpha);

}  // namespace poldif
