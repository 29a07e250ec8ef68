#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "laddermat/errors.hpp"

namespace laddermat {

// Exact arithmetic backbone. cpp_rational keeps every value reduced with a
// positive denominator and canonical zero 0/1, which is exactly the contract
// the rest of the library relies on. No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return numerator(r); }
inline Integer denominator_of(const Rational& r) { return denominator(r); }

// Parses "p", "-p" or "p/q" with decimal integer parts. Whitespace is not
// consumed; the caller trims. q = 0 is a parse error, not UB.
Rational parse_rational(const std::string& text);

// Prints "p" when q == 1, else "p/q"; inverse of parse_rational.
std::string to_string(const Rational& r);

}  // namespace laddermat
