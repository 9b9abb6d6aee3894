#pragma once

// Arbitrary-precision integer and rational aliases plus the handful of
// helpers every other module leans on.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wproj {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "12", "-7", "3/4", "-1/2" (surrounding whitespace tolerated).
// The result is canonicalized; a zero denominator is a ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);
// base^exponent for a signed exponent; base must be nonzero when exponent < 0.
Rational pow_signed(const Rational& base, long exponent);

// Largest r >= 0 with r^k <= n, for n >= 0 and k >= 1.
Integer iroot_floor(const Integer& n, unsigned long k);

// Floor / ceiling of a rational as an Integer.
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// Exponent of the prime p in n != 0.
std::int64_t valuation(const Integer& n, const Integer& p);

// gcd of the nonzero entries (0 if all entries are zero).
Integer gcd_of(const std::vector<Integer>& values);

inline int sign(const Integer& n) { return sgn(n); }
inline int sign(const Rational& r) { return sgn(r); }

inline bool fits_int64(const Integer& n) { return n.fits_slong_p(); }

}  // namespace wproj
