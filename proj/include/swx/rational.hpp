#pragma once

// Exact scalars used throughout swx. Nothing in the library touches
// floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace swx {

// Expression templates are disabled so that arithmetic results are plain
// values (auto-safe, member functions available).
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Canonical rendering: "p" for integers, "p/q" with q > 0 and gcd(p,q) = 1
/// otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
/// Throws ValidationError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Requires is_integer(q).
Integer to_integer(const Rational& q);

int sign(const Rational& q);
int sign(const Integer& n);

/// Parses a comma separated list of rationals, e.g. "1,-2,3/4".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace swx
