#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wg {

using BigInt = mpz_class;
/// Exact rational: GMP keeps it reduced with a positive denominator after canonicalize().
using ExactRational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const ExactRational& q);
std::string to_string(const BigInt& z);

/// Strict parser: accepts only canonical text (reduced, positive denominator, no "/1").
ExactRational parse_rational(std::string_view text);

BigInt pow(const BigInt& base, unsigned long exponent);
ExactRational pow(const ExactRational& base, unsigned long exponent);
/// Integer power with possibly negative exponent.
ExactRational ipow(const ExactRational& base, long exponent);

int sign(const ExactRational& q);

/// num/den in lowest terms; den must be nonzero.
ExactRational ratio(const BigInt& num, const BigInt& den);

} // namespace wg
