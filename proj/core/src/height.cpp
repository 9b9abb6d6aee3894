#include "wproj/height.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "wproj/error.hpp"
#include "wproj/factor.hpp"

namespace wproj {

namespace {

Integer gcd_nonzero(std::span<const Integer> coords) {
  return gcd_of(std::vector<Integer>(coords.begin(), coords.end()));
}

Rational ratio(std::int64_t a, std::uint64_t b) {
  Rational r(static_cast<long>(a), static_cast<unsigned long>(b));
  r.canonicalize();
  return r;
}

}  // namespace

FormalLog local_height(const WPoint& x, const Place& v) {
  const WeightVector& w = x.weights();
  if (v.is_finite()) {
    std::optional<Rational> low;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      const Rational r = ratio(valuation(x[i], v.prime()), w[i]);
      if (!low || r < *low) low = r;
    }
    return FormalLog::log_prime(v.prime(), -*low);
  }
  std::optional<FormalLog> best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    FormalLog term = FormalLog::log_abs(Rational(x[i])) * ratio(1, w[i]);
    if (!best || flog_compare(term, *best) == std::strong_ordering::greater) best = std::move(term);
  }
  return *best;
}

FormalLog lwh(const WPoint& x) {
  FormalLog total = local_height(x, Place::infinite());
  const Integer g = gcd_nonzero(x.coords());
  if (g != 1) {
    for (const auto& [p, e] : factor(g).factors) total += local_height(x, Place::finite(p));
  }
  return total;
}

Integer wh_m_power(const WPoint& x) {
  Integer best = 0;
  for (const auto& v : veronese(x)) {
    if (cmp(abs(v), best) > 0) best = abs(v);
  }
  return best;
}

FormalLog hgcd(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw DomainError("hgcd(0, 0) is undefined");
  if (a == 0) return hgcd(b, b);
  if (b == 0) return hgcd(a, a);
  FormalLog total;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  if (g != 1) {
    for (const auto& [p, e] : factor(g).factors) {
      const auto m = std::min(valuation(Integer(a.get_num()), p), valuation(Integer(b.get_num()), p));
      total += FormalLog::log_prime(p, static_cast<long>(m));
    }
  }
  // ord+_inf(t) = max(-log|t|, 0), positive only when |t| < 1.
  const auto inf_plus = [](const Rational& t) {
    return cmp(abs(t), Rational(1)) < 0 ? -FormalLog::log_abs(t) : FormalLog();
  };
  total += flog_min(inf_plus(a), inf_plus(b));
  return total;
}

Integer hwgcd_mult(std::span<const Rational> x, const WeightVector& w) {
  if (x.size() != w.size()) throw DomainError("tuple has the wrong number of coordinates");
  Integer g = 0;
  for (const auto& v : x) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  if (g == 0) throw DomainError("all-zero tuple");
  Integer out = 1;
  if (g == 1) return out;
  for (const auto& [p, e] : factor(g).factors) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      // ord+_p(x_i) = ord_p of the numerator here because p divides it.
      best = std::min<std::int64_t>(best, valuation(Integer(x[i].get_num()), p) / static_cast<std::int64_t>(w[i]));
    }
    if (best > 0) out *= pow(p, static_cast<unsigned long>(best));
  }
  return out;
}

std::int64_t archimedean_floor(const Rational& a, std::uint64_t q) {
  if (a == 0) throw DomainError("archimedean floor of 0");
  if (cmp(abs(a), Rational(1)) >= 0) return 0;
  const FormalLog target = -FormalLog::log_abs(a);  // > 0
  // Start from a floating estimate and correct it with exact comparisons.
  const double est = target.to_double() / static_cast<double>(q);
  std::int64_t k = std::isfinite(est) ? std::max<std::int64_t>(0, static_cast<std::int64_t>(est)) : 0;
  const auto at = [&](std::int64_t j) { return FormalLog::constant(Rational(static_cast<long>(j * static_cast<std::int64_t>(q)))); };
  while (k > 0 && flog_compare(at(k), target) == std::strong_ordering::greater) --k;
  while (flog_compare(at(k + 1), target) != std::strong_ordering::greater) ++k;
  return k;
}

FormalLog log_hwgcd_tuple(std::span<const Rational> x, const WeightVector& w) {
  const Integer mult = hwgcd_mult(x, w);
  FormalLog total = FormalLog::log_abs(Rational(mult));
  std::int64_t k = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) k = std::min(k, archimedean_floor(x[i], w[i]));
  }
  if (k > 0) total += FormalLog::constant(Rational(static_cast<long>(k)));
  return total;
}

FormalLog log_hwgcd_point(const WPoint& x) {
  std::vector<Rational> q(x.coords().begin(), x.coords().end());
  return log_hwgcd_tuple(q, x.weights());
}

DivisorSpec anticanonical(const WeightVector& w) {
  DivisorSpec d(w.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = i;
  return d;
}

SplitHeight split_height_S(const WPoint& x, std::span<const Integer> S, const DivisorSpec& divisor) {
  if (!x.normalized()) throw PreconditionError("split height needs a normalized point (wgcd = 1)");
  const Rational inv_m(1, static_cast<unsigned long>(x.weights().lcm()));
  SplitHeight out;
  for (const std::size_t i : divisor) {
    if (i >= x.size()) throw DomainError("divisor index " + std::to_string(i) + " out of range");
    if (x[i] == 0) throw InfiniteHeightError("point lies on the divisor H_" + std::to_string(i));
    if (abs(x[i]) == 1) continue;
    for (const auto& [p, e] : factor(x[i]).factors) {
      const FormalLog term = FormalLog::log_prime(p, inv_m * static_cast<unsigned long>(e));
      if (std::find(S.begin(), S.end(), p) != S.end()) {
        out.in_S += term;
      } else {
        out.out_S += term;
      }
    }
  }
  return out;
}

}  // namespace wproj
