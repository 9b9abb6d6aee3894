#pragma once

#include <cstdint>
#include <vector>

namespace wproj {

// All primes below 10^6, computed once.
const std::vector<std::uint32_t>& small_primes();

// Increasing stream of primes starting at `from`, produced by a segmented
// sieve so arbitrarily long runs need only O(sqrt(limit)) memory.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint64_t from = 2);

  // Next prime (>= the previous one + 1).
  std::uint64_t next();

 private:
  void refill();

  std::uint64_t segment_lo_;
  std::vector<std::uint64_t> buffer_;
  std::size_t pos_ = 0;
  std::vector<std::uint32_t> base_;  // sieving primes up to sqrt(segment_hi)
};

}  // namespace wproj
