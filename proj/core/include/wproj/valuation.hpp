#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "wproj/formal_log.hpp"
#include "wproj/integer.hpp"

namespace wproj {

// A place of Q: one finite place per prime, plus the archimedean place.
class Place {
 public:
  // Throws DomainError unless p is prime.
  static Place finite(const Integer& p);
  static Place infinite() { return Place(); }
  // "inf", "oo", "infinity" or a prime.
  static Place parse(std::string_view text);

  bool is_finite() const { return prime_.has_value(); }
  bool is_infinite() const { return !prime_.has_value(); }
  // Precondition: is_finite().
  const Integer& prime() const { return *prime_; }

  std::string to_string() const;
  bool operator==(const Place&) const = default;

 private:
  Place() = default;
  std::optional<Integer> prime_;
};

// A value in T extended by +infinity.
template <class T>
class Extended {
 public:
  Extended(T value) : value_(std::move(value)) {}  // NOLINT: implicit by design of the sentinel
  static Extended infinity() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  const T& value() const { return *value_; }

  bool operator==(const Extended&) const = default;

 private:
  Extended() = default;
  std::optional<T> value_;
};

// Additive valuations. At the archimedean place ord is -log|a| (so that the
// clamped version measures proximity to 0).
std::int64_t ord(const Rational& a, const Integer& p);
FormalLog ord_infinite(const Rational& a);
std::variant<std::int64_t, FormalLog> ord(const Rational& a, const Place& v);

// max(ord, 0), with +infinity at a = 0.
Extended<std::int64_t> ord_plus(const Rational& a, const Integer& p);
Extended<FormalLog> ord_plus_infinite(const Rational& a);
std::variant<Extended<std::int64_t>, Extended<FormalLog>> ord_plus(const Rational& a, const Place& v);

// The largest divisor of |x| coprime to every prime in S (x != 0).
Integer prime_to_S(const Integer& x, std::span<const Integer> S);

// Parses "2,3,5" into a sorted, deduplicated list of primes; "" is the empty set.
std::vector<Integer> parse_prime_set(std::string_view text);

}  // namespace wproj
