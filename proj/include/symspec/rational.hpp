#ifndef SYMSPEC_RATIONAL_HPP
#define SYMSPEC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace symspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a decimal literal ("0.5", "-1.25e-3").
/// Decimals are read digit by digit, so "0.1" is exactly 1/10.
std::optional<Rational> parse_rational(std::string_view text);

/// Short form: "3", "-1/2".
std::string to_string(const Rational& q);

/// Always "p/q", including "2/1".
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);

bool is_integer(const Rational& q);

/// floor for exact rationals
BigInt floor(const Rational& q);

/// True when q is one of 0, -1, -2, ...
bool is_nonpositive_integer(const Rational& q);

}  // namespace symspec

#endif
