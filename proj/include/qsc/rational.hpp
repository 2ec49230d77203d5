#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace qsc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses an integer literal ("-3") or a fraction ("p/q", q != 0).
/// Whitespace is not accepted. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text: "n" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& value);

/// Largest integer not exceeding value.
Integer floor(const Rational& value);

} // namespace qsc
