#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wproj/integer.hpp"
#include "wproj/weights.hpp"

namespace wproj {

// An integral representative (x_0, ..., x_n) != 0 of a point of P_w(Q).
// Two WPoints compare equal with == only if their coordinates agree; use
// equals() for equality of the underlying points.
class WPoint {
 public:
  // DomainError on a coordinate-count mismatch or the all-zero tuple.
  WPoint(WeightVector w, std::vector<Integer> coords);

  const WeightVector& weights() const { return w_; }
  std::span<const Integer> coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }

  // Largest g > 0 with g^{q_i} | x_i for all i (computed at construction).
  const Integer& wgcd() const { return wgcd_; }
  bool normalized() const { return wgcd_ == 1; }

  // "x0:x1:...:xn"
  std::string to_string() const;

  bool operator==(const WPoint& other) const { return w_ == other.w_ && coords_ == other.coords_; }

 private:
  WeightVector w_;
  std::vector<Integer> coords_;
  Integer wgcd_;
};

// Colon-separated rationals: "1/2:4:8".
std::vector<Rational> parse_rational_tuple(std::string_view text);
// Colon-separated integers: "8:16" (ParseError on a non-integer entry).
std::vector<Integer> parse_integer_tuple(std::string_view text);

// prod_p p^{min_i floor(ord_p(x_i)/q_i)} over the nonzero coordinates.
Integer wgcd(const WeightVector& w, std::span<const Integer> coords);

struct Integralized {
  WPoint point;
  Integer lambda;  // the minimal positive integer with lambda^{q_i} x_i integral
};

// Scales a rational tuple by the least positive integer lambda making every
// lambda^{q_i} x_i an integer. DomainError for the all-zero tuple.
Integralized integralize(std::span<const Rational> coords, const WeightVector& w);

// (1/wgcd) * x: coordinates x_i / g^{q_i}.
WPoint normalize(const WPoint& x);

// Unique representative of the orbit of x under lambda * x = (lambda^{q_i} x_i)
// with lambda ranging over all algebraic numbers keeping the tuple rational.
// Per prime p the common exponent is reduced modulo the lattice (1/d_J) Z,
// d_J the gcd of the weights on the support; the residual sign character
// ((-1)^{q_i/d_J}) is fixed by making the last coordinate where it acts
// positive.
WPoint canonicalize(const WPoint& x);
bool is_canonical(const WPoint& x);

// Equality in P_w(Q). DomainError if the weight vectors differ.
bool equals(const WPoint& x, const WPoint& y);

// (lambda^{q_i} x_i). DomainError if lambda = 0 or a coordinate leaves Z.
WPoint act(const Rational& lambda, const WPoint& x);

// phi_m(x) = [x_i^{m/q_i}] as a primitive integer tuple whose first nonzero
// entry is positive.
std::vector<Integer> veronese(const WPoint& x);

// Per-coordinate lexicographic order on (|x_i|, is_negative); output order.
bool coordinate_key_less(std::span<const Integer> a, std::span<const Integer> b);

// Bitmask of nonzero coordinates (n < 64).
std::uint64_t support_mask(std::span<const Integer> coords);

}  // namespace wproj
