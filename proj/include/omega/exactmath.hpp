#ifndef OMEGA_EXACTMATH_HPP
#define OMEGA_EXACTMATH_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace omega {

// Arbitrary-precision nonnegative integer. Every multiplicity in the
// library is carried either as one of these (exact, never overflows or
// rounds) or as a plain double holding its natural log.
using ExactNat = boost::multiprecision::cpp_int;

// Exact ratio of two integers, kept in lowest terms. Probabilities derived
// from multiplicity tables stay rational until they are rendered.
using Rational = boost::multiprecision::cpp_rational;

// n! as an exact integer.
ExactNat factorial(std::int64_t n);

// n choose k, exact. Throws std::domain_error for k > n or negative input.
ExactNat binomial(std::int64_t n, std::int64_t k);

// ln(n!). Exact product below a small cutoff, log-gamma above; relative
// error stays below 1e-12 for n up to 1e6 and the result is finite for any
// n up to 1e9 and beyond.
double ln_factorial(std::int64_t n);

// ln(n choose k) via ln_factorial. Throws std::domain_error for k > n.
double ln_binomial(std::int64_t n, std::int64_t k);

// Natural log of a positive big integer, good to a few ulps regardless of
// magnitude. Throws std::domain_error for x <= 0.
double ln_nat(const ExactNat& x);

// Nearest double to an exact rational; safe for numerator/denominator far
// beyond double range.
double to_double(const Rational& r);

}  // namespace omega

#endif  // OMEGA_EXACTMATH_HPP
