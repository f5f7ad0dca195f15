#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace rts {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// Binomial coefficient saturated at UINT64_MAX, for size guards.
inline std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
  const BigInt c = binomial(n, k);
  if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(c);
}

/// Rational as "a/b" (or "a" when integral).
inline std::string to_fraction_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Exact rational from a decimal literal such as "0.125" or "1e-3".
Rational parse_decimal(const std::string& text);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal_string(const Rational& x, int digits);

}  // namespace rts
