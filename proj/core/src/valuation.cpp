#include "wproj/valuation.hpp"

#include <algorithm>

#include "wproj/error.hpp"
#include "wproj/factor.hpp"

namespace wproj {

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw DomainError("place: " + p.get_str() + " is not prime");
  Place out;
  out.prime_ = p;
  return out;
}

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "oo" || text == "infinity" || text == "\xE2\x88\x9E") return infinite();
  return finite(parse_integer(text));
}

std::string Place::to_string() const { return is_finite() ? prime_->get_str() : "inf"; }

std::int64_t ord(const Rational& a, const Integer& p) {
  if (a == 0) throw DomainError("ord: valuation of zero (use ord_plus)");
  std::int64_t v = 0;
  if (a.get_num() != 1 && a.get_num() != -1) v += valuation(Integer(a.get_num()), p);
  if (a.get_den() != 1) v -= valuation(Integer(a.get_den()), p);
  return v;
}

FormalLog ord_infinite(const Rational& a) {
  if (a == 0) throw DomainError("ord: valuation of zero (use ord_plus)");
  return -FormalLog::log_abs(a);
}

std::variant<std::int64_t, FormalLog> ord(const Rational& a, const Place& v) {
  if (v.is_finite()) return ord(a, v.prime());
  return ord_infinite(a);
}

Extended<std::int64_t> ord_plus(const Rational& a, const Integer& p) {
  if (a == 0) return Extended<std::int64_t>::infinity();
  return std::max<std::int64_t>(ord(a, p), 0);
}

Extended<FormalLog> ord_plus_infinite(const Rational& a) {
  if (a == 0) return Extended<FormalLog>::infinity();
  // -log|a| > 0 exactly when |a| < 1.
  if (abs(a) >= 1) return FormalLog{};
  return ord_infinite(a);
}

std::variant<Extended<std::int64_t>, Extended<FormalLog>> ord_plus(const Rational& a, const Place& v) {
  if (v.is_finite()) return ord_plus(a, v.prime());
  return ord_plus_infinite(a);
}

Integer prime_to_S(const Integer& x, std::span<const Integer> S) {
  if (x == 0) throw DomainError("prime_to_S: zero has no prime-to-S part");
  Integer rest = abs(x);
  for (const auto& p : S) {
    if (p < 2) throw DomainError("prime_to_S: " + p.get_str() + " is not prime");
    mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  }
  return rest;
}

std::vector<Integer> parse_prime_set(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!piece.empty()) {
      Integer p = parse_integer(piece);
      if (!is_prime(p)) throw DomainError("'" + p.get_str() + "' is not prime");
      out.push_back(p);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wproj
