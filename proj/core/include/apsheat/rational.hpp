#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace apsheat {

/// Arbitrary-size exact rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double to_double(const Rational& q);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "3", "-7/4", "0.125", "1e-3" style literals exactly.
/// Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace apsheat
