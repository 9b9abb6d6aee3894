#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wproj/formal_log.hpp"
#include "wproj/integer.hpp"
#include "wproj/point.hpp"
#include "wproj/weights.hpp"

namespace wproj::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

inline WeightVector weights(std::initializer_list<std::uint64_t> q) { return WeightVector(std::vector<std::uint64_t>(q)); }

inline WPoint point(const WeightVector& w, std::initializer_list<long> coords) {
  std::vector<Integer> c;
  for (long v : coords) c.emplace_back(v);
  return WPoint(w, std::move(c));
}

inline FormalLog L(long p, const Rational& c = 1) { return FormalLog::log_prime(Integer(p), c); }

inline Rational Q(const char* text) { return parse_rational(text); }

// Random nonzero integer tuple whose entries are products of small primes,
// so that weighted gcds are often nontrivial.
inline std::vector<Integer> smooth_tuple(std::size_t n, std::int64_t max_prime, int max_factors) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::size_t np = 0;
  while (np < std::size(primes) && primes[np] <= max_prime) ++np;
  std::vector<Integer> out(n);
  bool any = false;
  for (auto& v : out) {
    if (uniform(0, 9) == 0) {
      v = 0;
      continue;
    }
    v = uniform(0, 1) ? 1 : -1;
    const int k = static_cast<int>(uniform(0, max_factors));
    for (int j = 0; j < k; ++j) v *= primes[uniform(0, static_cast<std::int64_t>(np) - 1)];
    any = true;
  }
  if (!any) out[0] = 1;
  return out;
}

inline std::vector<Integer> random_tuple(std::size_t n, std::int64_t radius) {
  std::vector<Integer> out(n);
  do {
    for (auto& v : out) v = big(uniform(-radius, radius));
  } while (std::all_of(out.begin(), out.end(), [](const Integer& v) { return v == 0; }));
  return out;
}

// Largest g with g^{q_i} | x_i straight from the definition: every such g
// divides the gcd of the nonzero coordinates, so try each of its divisors.
inline Integer wgcd_by_divisors(const WeightVector& w, const std::vector<Integer>& x) {
  Integer g0 = 0;
  for (const auto& v : x) g0 = gcd(g0, v);
  std::vector<Integer> divisors;
  for (Integer d = 1; d * d <= g0; ++d) {
    if (g0 % d == 0) {
      divisors.push_back(d);
      divisors.push_back(g0 / d);
    }
  }
  Integer best = 1;
  for (const auto& d : divisors) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x[i] % pow(d, w[i]) == 0;
    if (ok && d > best) best = d;
  }
  return best;
}

// (lambda^{q_i} x_i) as rationals, for lambda where act() would leave Z.
inline std::vector<Rational> scaled(const Rational& lambda, const WPoint& x) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(pow(lambda, x.weights()[i]) * Rational(x[i]));
  return out;
}

}  // namespace wproj::testing
