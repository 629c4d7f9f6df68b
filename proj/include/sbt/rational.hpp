#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <string_view>

namespace sbt {

// Exact coefficient field. cpp_rational keeps the canonical form invariant
// (reduced, positive denominator) on every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Accepts an optional sign followed by "p/q", a plain integer, or a plain
// decimal string ("0.25" -> 1/4, converted exactly). Throws
// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1. parse_rational accepts both.
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

// r^e with e possibly negative (then r must be nonzero).
Rational rational_pow(const Rational& r, long e);

inline bool is_positive(const Rational& r) { return r > 0; }

}  // namespace sbt
