#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "wproj/integer.hpp"

namespace wproj {

// An exact real number  c_e + sum_p c_p * log p  with rational coefficients
// and finite prime support. Every height in the library is one of these.
//
// {1} together with {log p : p prime} is linearly independent over Q, so two
// values are equal exactly when their coefficients agree; strict order is
// certified by interval evaluation with MPFR at doubling precision.
class FormalLog {
 public:
  FormalLog() = default;

  // c * log p. Throws DomainError if p is not prime.
  static FormalLog log_prime(const Integer& p, const Rational& c = 1);
  // log |r| for r != 0.
  static FormalLog log_abs(const Rational& r);
  // The rational number c (the coefficient of log e).
  static FormalLog constant(const Rational& c);

  const std::map<Integer, Rational>& coefficients() const { return coeffs_; }
  const Rational& constant_term() const { return constant_; }
  Rational coefficient(const Integer& p) const;

  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }
  // -1, 0 or +1, certified.
  int sign() const;

  FormalLog& operator+=(const FormalLog& other);
  FormalLog& operator-=(const FormalLog& other);
  FormalLog& operator*=(const Rational& c);

  friend FormalLog operator+(FormalLog a, const FormalLog& b) { return a += b; }
  friend FormalLog operator-(FormalLog a, const FormalLog& b) { return a -= b; }
  friend FormalLog operator*(FormalLog a, const Rational& c) { return a *= c; }
  friend FormalLog operator*(const Rational& c, FormalLog a) { return a *= c; }
  FormalLog operator-() const { return *this * Rational(-1); }

  bool operator==(const FormalLog& other) const = default;

  // Nearest double (evaluated at 128 bits, then rounded).
  double to_double() const;
  // Decimal rendering with `digits` significant digits.
  std::string decimal(int digits = 15) const;
  // Symbolic rendering such as "(1/4)·log 2", "2·log 2 + log 3", "0".
  std::string to_string() const;
  // Inverse of to_string; also accepts '*' for '·' and a Unicode minus.
  static FormalLog parse(std::string_view text);

 private:
  void add_term(const Integer& p, const Rational& c);

  std::map<Integer, Rational> coeffs_;  // no zero values stored
  Rational constant_ = 0;
};

std::strong_ordering flog_compare(const FormalLog& a, const FormalLog& b);

FormalLog flog_combine(std::span<const std::pair<Rational, FormalLog>> terms);

inline const FormalLog& flog_max(const FormalLog& a, const FormalLog& b) {
  return flog_compare(a, b) == std::strong_ordering::less ? b : a;
}
inline const FormalLog& flog_min(const FormalLog& a, const FormalLog& b) {
  return flog_compare(a, b) == std::strong_ordering::greater ? b : a;
}

// Certified enclosure [lo, hi] of the value at `bits` of working precision.
struct Enclosure {
  double lo;
  double hi;
};
Enclosure enclose(const FormalLog& value, long bits);

}  // namespace wproj
