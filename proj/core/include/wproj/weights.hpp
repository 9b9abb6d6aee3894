#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wproj/integer.hpp"

namespace wproj {

// Weights (q_0, ..., q_n) of a weighted projective space P_w^n, n >= 1.
class WeightVector {
 public:
  // Throws DomainError for fewer than two entries or a zero entry.
  explicit WeightVector(std::vector<std::uint64_t> q);
  // Comma-separated positive integers, e.g. "2,4,6,10" (ParseError on bad text).
  static WeightVector parse(std::string_view text);

  std::size_t size() const { return q_.size(); }
  std::size_t dimension() const { return q_.size() - 1; }
  std::uint64_t operator[](std::size_t i) const { return q_[i]; }
  std::span<const std::uint64_t> weights() const { return q_; }

  std::uint64_t lcm() const { return m_; }
  std::uint64_t gcd() const { return d_; }
  // gcd of all weights is 1.
  bool reduced() const { return d_ == 1; }
  // gcd of every n-element sub-tuple is 1.
  bool well_formed() const { return well_formed_; }

  std::string to_string() const;
  bool operator==(const WeightVector& other) const { return q_ == other.q_; }

 private:
  std::vector<std::uint64_t> q_;
  std::uint64_t m_ = 1;
  std::uint64_t d_ = 0;
  bool well_formed_ = false;
};

inline WeightVector classify(std::vector<std::uint64_t> q) { return WeightVector(std::move(q)); }

struct ReducedWeights {
  WeightVector weights;
  std::uint64_t divisor;
};

// (q_i / d) with d = gcd(q). Coordinates are unchanged by this isomorphism and
// logarithmic heights scale as lwh_w = (1/d) lwh_{w/d}.
ReducedWeights reduce_weights(const WeightVector& w);

struct WellFormStep {
  std::size_t index;       // the coordinate that keeps its weight
  std::uint64_t divisor;   // d' = gcd of the other weights
  bool operator==(const WellFormStep&) const = default;
};

struct WellFormalization {
  WeightVector weights;
  std::vector<WellFormStep> steps;

  // Image of a point of the original space: x_i <- x_i^{d'} for each step.
  std::vector<Integer> transform(std::span<const Integer> coords) const;
};

// Precondition: w reduced (PreconditionError otherwise). Repeatedly divides
// all weights but q_i by d' = gcd(q_j : j != i) > 1, always choosing the
// smallest such index i, until the vector is well-formed.
WellFormalization well_formalize(const WeightVector& w);

// gcd of the weights on the support {i : x_i != 0}; 0 for the all-zero tuple.
std::uint64_t support_gcd(const WeightVector& w, std::span<const Integer> coords);

// Membership in the singular locus of a well-formed P_w: some prime p | m
// divides q_i for every i with x_i != 0. PreconditionError if w is not
// well-formed, DomainError for the all-zero tuple.
bool is_singular(const WeightVector& w, std::span<const Integer> coords);

}  // namespace wproj
