#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gtstate {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q". Decimal points are rejected: callers that
/// need exactness must never receive a float here.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

BigInt factorial(unsigned n);
BigInt binomial(long a, long b);  // zero when b < 0, a < 0 or b > a

inline Rational rational_pow(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace gtstate
