#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bdecomp {

using Integer = mpz_class;

/// Exact rational. gmpxx keeps arithmetic results canonical; values built
/// from a numerator/denominator pair must go through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string(). Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace bdecomp
