#include "wproj/primes.hpp"

#include <cmath>

namespace wproj {

namespace {

constexpr std::uint32_t kSmallLimit = 1000000;
constexpr std::uint64_t kSegment = 1 << 18;

std::vector<std::uint32_t> sieve(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kSmallLimit);
  return primes;
}

PrimeStream::PrimeStream(std::uint64_t from) : segment_lo_(from < 2 ? 2 : from) { refill(); }

std::uint64_t PrimeStream::next() {
  while (pos_ == buffer_.size()) refill();
  return buffer_[pos_++];
}

void PrimeStream::refill() {
  const std::uint64_t lo = segment_lo_;
  const std::uint64_t hi = lo + kSegment;  // exclusive
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(hi))) + 1;
  if (base_.empty() || base_.back() < root) {
    const auto& small = small_primes();
    if (root <= small.back()) {
      base_ = small;
    } else {
      base_ = sieve(static_cast<std::uint32_t>(root));
    }
  }
  std::vector<bool> composite(hi - lo, false);
  for (std::uint32_t p : base_) {
    const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (pp >= hi) break;
    std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = true;
  }
  buffer_.clear();
  pos_ = 0;
  for (std::uint64_t i = 0; i < hi - lo; ++i) {
    if (!composite[i] && lo + i >= 2) buffer_.push_back(lo + i);
  }
  segment_lo_ = hi;
}

}  // namespace wproj
