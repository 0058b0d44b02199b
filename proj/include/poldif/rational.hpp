#pragma once

// Exact scalar types. Everything numeric in poldif goes through these two
// aliases; expression templates are disabled so the types behave as plain
// values inside Eigen containers and std algorithms.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <string>

namespace poldif {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// n! as an exact big integer. n must be non-negative.
BigInt factorial(long n);

/// n (n-1) ... (n-k+1); 1 when k == 0.
BigInt falling_factorial(long n, long k);

/// Binomial coefficient; zero when k < 0 or k > n (n >= 0).
BigInt binomial(long n, long k);

/// "a" or "a/b" in lowest terms.
std::string to_string(const Rational& r);

}  // namespace poldif
