#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace galileo {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `p` or `p/q` (optional sign, decimal digits, q != 0) into canonical form.
/// Throws std::invalid_argument on anything else, including decimals like "1.5".
Rational parse_rational(std::string_view text);

/// Canonical text: `p` when the denominator is 1, else `p/q`.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Exact integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace galileo
