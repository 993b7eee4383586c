#include "omega/exactmath.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace omega {

namespace {

// Largest n whose factorial still fits in 64 bits is 20; below that the
// log of the exact product beats lgamma by a few ulps.
constexpr std::int64_t kExactLogCutoff = 20;

void require_nonneg(std::int64_t v, const char* what) {
  if (v < 0) {
    throw std::domain_error(std::string(what) + ": argument must be nonnegative");
  }
}

}  // namespace

ExactNat factorial(std::int64_t n) {
  require_nonneg(n, "factorial");
  ExactNat r = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

ExactNat binomial(std::int64_t n, std::int64_t k) {
  require_nonneg(n, "binomial");
  require_nonneg(k, "binomial");
  if (k > n) {
    throw std::domain_error("binomial: k > n");
  }
  if (k > n - k) {
    k = n - k;
  }
  ExactNat r = 1;
  // After step i, r = C(n-k+i, i); the division is always exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

double ln_factorial(std::int64_t n) {
  require_nonneg(n, "ln_factorial");
  if (n < kExactLogCutoff) {
    std::uint64_t f = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
      f *= static_cast<std::uint64_t>(i);
    }
    return std::log(static_cast<double>(f));
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double ln_binomial(std::int64_t n, std::int64_t k) {
  require_nonneg(n, "ln_binomial");
  require_nonneg(k, "ln_binomial");
  if (k > n) {
    throw std::domain_error("ln_binomial: k > n");
  }
  return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
}

double ln_nat(const ExactNat& x) {
  if (x <= 0) {
    throw std::domain_error("ln_nat: argument must be positive");
  }
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 1000) {
    return std::log(x.convert_to<double>());
  }
  // Keep the top 64 bits; the discarded tail perturbs the log by < 2^-63.
  const std::size_t shift = bits - 64;
  const ExactNat top = x >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::numbers::ln2;
}

double to_double(const Rational& r) {
  if (r == 0) {
    return 0.0;
  }
  if (r < 0) {
    return -to_double(-r);
  }
  const ExactNat num = boost::multiprecision::numerator(r);
  const ExactNat den = boost::multiprecision::denominator(r);
  const std::size_t num_bits = boost::multiprecision::msb(num) + 1;
  const std::size_t den_bits = boost::multiprecision::msb(den) + 1;
  if (num_bits <= 1000 && den_bits <= 1000) {
    return num.convert_to<double>() / den.convert_to<double>();
  }
  return std::exp(ln_nat(num) - ln_nat(den));
}

}  // namespace omega
