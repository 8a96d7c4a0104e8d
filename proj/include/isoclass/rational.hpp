#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace isoclass {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational value. cpp_rational keeps every value in lowest terms with a
// positive denominator and normalizes eagerly on construction and arithmetic;
// the counting code relies on that to keep intermediate integers small.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical "num/den" string; the denominator is kept even when it is 1 so the
// rendered form is stable under parse/re-render round trips.
std::string to_fraction_string(const Rational& r);

// Inverse of to_fraction_string; also accepts a bare integer literal.
// Throws std::invalid_argument on malformed input.
Rational parse_fraction(const std::string& s);

double to_double(const Rational& r);

// base^exp for integer exp; exp < 0 requires base != 0.
Rational pow_rational(const Rational& base, long exp);

}  // namespace isoclass
