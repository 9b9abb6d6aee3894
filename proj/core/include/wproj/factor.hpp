#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wproj/integer.hpp"

namespace wproj {

struct PrimeFactorization {
  int unit = 1;  // +1 or -1
  std::vector<std::pair<Integer, unsigned>> factors;  // primes strictly increasing

  // unit * prod p^e
  Integer value() const;

  bool operator==(const PrimeFactorization&) const = default;
};

// Complete factorization of n != 0 (DomainError for 0). Trial division by the
// primes below 10^6, deterministic Miller-Rabin below 2^64, Baillie-PSW above,
// and Pollard-Brent rho for splitting composite cofactors.
PrimeFactorization factor(const Integer& n);

// Sorted distinct primes dividing n != 0.
std::vector<Integer> prime_support(const Integer& n);

bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

}  // namespace wproj
