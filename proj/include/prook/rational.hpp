#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace prook {

// Exact arbitrary-precision arithmetic.  Rationals are always stored in
// lowest terms with positive denominator; the backend maintains that.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q" with q > 0 after reduction.
std::string rational_to_string(const Rational& r);

// Accepts optional sign, digits, optional "/digits" with nonzero
// denominator.  Throws std::invalid_argument on anything else.
Rational rational_from_string(std::string_view s);

} // namespace prook
