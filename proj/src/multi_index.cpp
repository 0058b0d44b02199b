#include "poldif/multi_index.hpp"

#include <cassert>
#include <numeric>

namespace poldif {

namespace {

// Number of exponent vectors of length `vars` summing to `degree`.
std::size_t count_of_degree(std::size_t vars, long degree) {
  if (degree < 0) return 0;
  if (vars == 0) return degree == 0 ? 1 : 0;
  return binomial(degree + static_cast<long>(vars) - 1, static_cast<long>(vars) - 1)
      .convert_to<std::size_t>();
}

void enumerate(std::size_t pos, long remaining, std::vector<unsigned>& current,
               std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = static_cast<unsigned>(remaining);
    out.emplace_back(current);
    return;
  }
  for (long e = remaining; e >= 0; --e) {
    current[pos] = static_cast<unsigned>(e);
    enumerate(pos + 1, remaining - e, current, out);
  }
}

}  // namespace

MultiIndex MultiIndex::unit(std::size_t arity, std::size_t variable) {
  MultiIndex alpha(arity);
  alpha[variable] = 1;
  return alpha;
}

long MultiIndex::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0L);
}

BigInt MultiIndex::factorial() const {
  BigInt result = 1;
  for (unsigned e : exponents_) result *= poldif::factorial(e);
  return result;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  assert(arity() == other.arity());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  assert(arity() == other.arity());
  MultiIndex sum = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) sum.exponents_[i] += other.exponents_[i];
  return sum;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  assert(other.divides(*this));
  MultiIndex diff = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) diff.exponents_[i] -= other.exponents_[i];
  return diff;
}

bool GradedLexGreater::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const long da = a.total_degree();
  const long db = b.total_degree();
  if (da != db) return da > db;
  return a > b;
}

std::vector<MultiIndex> monomials_of_degree(std::size_t arity, long degree) {
  std::vector<MultiIndex> out;
  if (degree < 0 || arity == 0) return out;
  out.reserve(count_of_degree(arity, degree));
  std::vector<unsigned> current(arity, 0);
  enumerate(0, degree, current, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t arity, long degree) {
  std::vector<MultiIndex> out;
  for (long d = 0; d <= degree; ++d) {
    auto block = monomials_of_degree(arity, d);
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

std::size_t monomial_index_in_degree(const MultiIndex& alpha) {
  // Count the same-degree vectors that are lexicographically larger.
  const std::size_t k = alpha.arity();
  long remaining = alpha.total_degree();
  std::size_t index = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (long v = remaining; v > static_cast<long>(alpha[i]); --v) {
      index += count_of_degree(k - i - 1, remaining - v);
    }
    remaining -= alpha[i];
  }
  return index;
}

std::size_t monomial_index(const MultiIndex& alpha) {
  const long d = alpha.total_degree();
  std::size_t below = 0;
  for (long j = 0; j < d; ++j) below += count_of_degree(alpha.arity(), j);
  return below + monomial_index_in_degree(alpha);
}

}  // namespace poldif
