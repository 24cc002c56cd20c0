#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace subsum {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" (or just "p") into an exact rational. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

/// Formats in lowest terms as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// True iff n is a power of two (n >= 1).
bool is_pow2(const Int& n);

/// True iff x/scale, in lowest terms, has a power-of-two denominator.
/// Requires scale > 0.
bool is_dyadic(const Rational& x, const Rational& scale);

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace subsum
