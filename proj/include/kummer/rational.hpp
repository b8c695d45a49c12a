#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace kummer {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Accepts `p` or `p/q` with optional leading sign; q must be nonzero.
Rational parse_rational(std::string_view token);
std::string to_string(const Rational& q);

} // namespace kummer
