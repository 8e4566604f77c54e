#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", integers and decimals with an optional exponent ("-1.25e-3")
// exactly. Throws InvalidParameter on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// The shortest decimal that round-trips to `value`, as an exact fraction, so
// that 0.1 maps to 1/10 rather than to its binary expansion.
Rational rational_from_double(double value);

double to_double(const Rational& value);

std::string to_string(const Rational& value);

}  // namespace eqlab
