#pragma once

// Exact integer and rational arithmetic on top of GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thetawalls {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den. den must be nonzero.
Rational make_rational(const Integer &num, const Integer &den);

/// Parses "n", "n/d" or "-n/d" (surrounding blanks are not accepted).
/// Throws Error{ErrorKind::Parse} on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a base-10 integer literal.
Integer parse_integer(std::string_view text);

/// Always "num/den" with den > 0 and gcd(num, den) = 1, integers included.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

int sign(const Rational &q);
int sign(const Integer &z);

Integer floor(const Rational &q);
Integer ceil(const Rational &q);

/// floor(sqrt(q)) for q >= 0.
Integer floor_sqrt(const Rational &q);

/// Fits in a signed 64-bit value.
bool fits_int64(const Integer &z);
long long to_int64(const Integer &z);

}  // namespace thetawalls
