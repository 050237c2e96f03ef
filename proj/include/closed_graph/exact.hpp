#pragma once

// Arbitrary-precision integers and rationals used for every count and
// clustering coefficient.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace closed_graph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t k = 2; k <= n; ++k)
    r *= k;
  return r;
}

/// C(n, k); zero when k > n.
inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_string(const BigInt &x) { return x.str(); }

/// "p/q" in lowest terms, q > 0 (integers render as "p/1").
inline std::string to_string(const Rational &x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

/// Decimal rendering rounded half away from zero to the given number of digits.
inline std::string to_decimal(const Rational &x, unsigned digits = 6) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  bool negative = num < 0;
  if (negative)
    num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i)
    scale *= 10;
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string f = frac.str();
  if (f.size() < digits)
    f.insert(0, digits - f.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0)
    out += "." + f;
  return out;
}

} // namespace closed_graph
