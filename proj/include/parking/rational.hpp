#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace parking {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "-p/q" or an integer string. Throws ValidationError on anything else
/// (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical lowest-terms form: "p/q" with q > 1, or a bare integer.
std::string to_string(const Rational& value);

}  // namespace parking
