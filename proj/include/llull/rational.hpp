#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace llull {

/// Exact rational used for every degree of belief, weight and margin.
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(long long num, long long den = 1);

/// Accepts integers ("3", "-2"), fractions ("1/2") and decimals ("4.75").
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Always "num/den", with den >= 1 ("0/1", "3/1", "-1/2").
std::string format_rational(const Rational& value);

}  // namespace llull
