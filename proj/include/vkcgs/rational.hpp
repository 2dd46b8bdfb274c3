#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace vkcgs {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in
// canonical form: gcd(|num|, den) = 1 and den > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One point (or direction vector) with exact rational coordinates.
using Point = std::vector<Rational>;

/// "p" when the denominator is 1, "p/q" otherwise.
std::string formatRational(const Rational& value);

/// Parses "p" or "p/q" (q != 0; sign normalized into the numerator).
/// Throws std::invalid_argument on malformed input.
Rational parseRational(const std::string& text);

BigInt floorRational(const Rational& value);

}  // namespace vkcgs
