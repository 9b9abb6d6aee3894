#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wproj/formal_log.hpp"
#include "wproj/integer.hpp"
#include "wproj/point.hpp"
#include "wproj/valuation.hpp"
#include "wproj/weights.hpp"

namespace wproj {

// log max_i |x_i|_v^{1/q_i} over the nonzero coordinates.
FormalLog local_height(const WPoint& x, const Place& v);

// Logarithmic weighted height: sum of local heights over all places.
FormalLog lwh(const WPoint& x);

// wh(x)^m = H(veronese(x)), an exact positive rational (an integer here).
Integer wh_m_power(const WPoint& x);

// sum_v min(ord+_v(a), ord+_v(b)); a zero argument defers to the other.
FormalLog hgcd(const Rational& a, const Rational& b);

// prod_p p^{min_i floor(ord+_p(x_i)/q_i)}, finite places only.
Integer hwgcd_mult(std::span<const Rational> x, const WeightVector& w);

// sum_v min_i floor(ord+_v(x_i)/q_i) log p_v; the archimedean floor is an
// integer multiple of log e and vanishes on integer tuples.
FormalLog log_hwgcd_tuple(std::span<const Rational> x, const WeightVector& w);
FormalLog log_hwgcd_point(const WPoint& x);

// floor(max(-log|a|, 0) / q), decided exactly. a != 0.
std::int64_t archimedean_floor(const Rational& a, std::uint64_t q);

struct SplitHeight {
  FormalLog in_S;
  FormalLog out_S;
  FormalLog total() const { return in_S + out_S; }
};

// Coordinate-hyperplane divisor sum_k H_{i_k}; indices may repeat.
using DivisorSpec = std::vector<std::size_t>;
DivisorSpec anticanonical(const WeightVector& w);  // H_0 + ... + H_n

// Heights relative to the divisor split into places in S (plus infinity) and
// places outside S, with lambda_{H_i}(x, p) = (1/m) ord_p(x_i) log p.
// InfiniteHeightError if a coordinate on the divisor support vanishes.
SplitHeight split_height_S(const WPoint& x, std::span<const Integer> S, const DivisorSpec& divisor);

}  // namespace wproj
