#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace superpoint {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p" or "p/q" (q > 1).
std::string rational_text(const Rational& r);

/// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

}  // namespace superpoint
