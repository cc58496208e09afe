#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace ubckit {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Canonical ASCII form: "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Parses the canonical form only. Non-reduced fractions ("2/4"), explicit
/// unit denominators ("3/1"), signs on the denominator, leading '+' and
/// leading zeros are rejected with InputError.
Rational parse_rational(std::string_view text);

inline Rational abs_value(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace ubckit
