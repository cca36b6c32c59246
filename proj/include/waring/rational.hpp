#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace waring {

// GMP keeps mpq values canonical (reduced, positive denominator) after every
// arithmetic operation; only string construction needs an explicit
// canonicalize(), which parse_rational performs.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws Error(Parse) on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

inline bool is_zero(const Rational &q) { return sgn(q) == 0; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace waring
