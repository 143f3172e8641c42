#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cogfam {

/// Arbitrary-precision exact rational; the scalar used by every model.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(long long num, long long den) { return Rational(num, den); }

/// "11/3", "4", "-1/2".
std::string to_string(const Rational& value);

/// Parses the form produced by to_string; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

double to_double(const Rational& value);

/// Decimal rendering rounded half away from zero, computed exactly
/// (11/3 -> "3.67", 4 -> "4.00").
std::string to_decimal(const Rational& value, int digits = 2);

}  // namespace cogfam
