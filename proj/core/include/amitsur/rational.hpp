#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace amitsur {

using Integer = mpz_class;
/// Always held in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text or q = 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace amitsur
