#include "wproj/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wproj/error.hpp"
#include "wproj/primes.hpp"

namespace wproj {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic for every n < 3.3e24 with these bases, in particular all u64.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n odd composite.
u64 pollard_brent_u64(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Integer pollard_brent_big(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x = 2, g = 1, q = 1, ys = 2, diff;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          f(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        f(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Splits a cofactor free of primes below 10^6 into primes (unordered).
void split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d;
  if (n.fits_ulong_p()) {
    d = static_cast<unsigned long>(pollard_brent_u64(n.get_ui()));
  } else {
    d = pollard_brent_big(n);
  }
  split(d, out);
  split(Integer(n / d), out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) { return miller_rabin_u64(n); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return miller_rabin_u64(n.get_ui());
  // GMP >= 6.2 runs Baillie-PSW followed by `reps - 24` Miller-Rabin rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Integer PrimeFactorization::value() const {
  Integer out = unit;
  for (const auto& [p, e] : factors) out *= pow(p, e);
  return out;
}

PrimeFactorization factor(const Integer& n) {
  if (n == 0) throw DomainError("factor: zero has no factorization");
  PrimeFactorization result;
  result.unit = n < 0 ? -1 : 1;
  Integer rest = abs(n);
  std::map<Integer, unsigned> found;

  if (rest.fits_ulong_p()) {
    u64 r = rest.get_ui();
    bool checked_prime = false;
    for (std::uint32_t p : small_primes()) {
      if (static_cast<u64>(p) * p > r) break;
      if (r % p == 0) {
        unsigned e = 0;
        do {
          r /= p;
          ++e;
        } while (r % p == 0);
        found[Integer(static_cast<unsigned long>(p))] = e;
      }
      // A large prime cofactor would otherwise cost the full trial range.
      if (!checked_prime && p > 1000) {
        checked_prime = true;
        if (r > 1 && miller_rabin_u64(r)) break;
      }
    }
    rest = static_cast<unsigned long>(r);
  } else {
    Integer q;
    for (std::uint32_t p : small_primes()) {
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        const Integer pz = static_cast<unsigned long>(p);
        found[pz] = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t()));
        if (rest == 1) break;
      }
      if (rest.fits_ulong_p() && static_cast<u128>(p) * p > rest.get_ui()) break;
    }
  }
  split(rest, found);
  result.factors.assign(found.begin(), found.end());
  return result;
}

std::vector<Integer> prime_support(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [p, e] : factor(n).factors) out.push_back(p);
  return out;
}

}  // namespace wproj
