#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace juror {

// Exact rational in canonical reduced form with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers ("-3") and finite decimals ("0.75", ".5"), all
// converted exactly. Throws Error(kParseError) otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Exact decimal rendering when the denominator has only the prime factors 2
// and 5 ("1.25"), otherwise "p/q".
std::string to_exact_decimal(const Rational& value);

// Rounded decimal for human-readable tables only.
std::string to_approx_decimal(const Rational& value, int digits = 6);

inline bool is_probability(const Rational& value) { return value >= 0 && value <= 1; }

}  // namespace juror
