#include "poldif/rational.hpp"

#include <cassert>

namespace poldif {

BigInt factorial(long n) {
  assert(n >= 0);
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt falling_factorial(long n, long k) {
  BigInt result = 1;
  for (long i = 0; i < k; ++i) result *= (n - i);
  return result;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

}  // namespace poldif
