#pragma once

#include <span>
#include <vector>

#include "wproj/formal_log.hpp"
#include "wproj/integer.hpp"
#include "wproj/point.hpp"
#include "wproj/poly.hpp"
#include "wproj/valuation.hpp"

namespace wproj {

// Y = V(f_1, ..., f_t) with a caller-asserted codimension r (not checked).
class SubschemeSpec {
 public:
  // ParseError if the list is empty or the polynomials use different variables.
  SubschemeSpec(std::vector<WPoly> polys, unsigned asserted_codim = 1);

  const std::vector<WPoly>& polys() const { return polys_; }
  unsigned asserted_codim() const { return codim_; }
  const VariableTable& vars() const { return polys_.front().vars(); }
  const WeightVector& weights() const { return vars().weights(); }

  std::vector<Integer> values(std::span<const Integer> alpha) const;
  bool contains(const WPoint& x) const;

 private:
  std::vector<WPoly> polys_;
  unsigned codim_;
};

// min_j -log(|f_j(x)|_v / max_i |x_i|_v^{d_j/q_i}); infinite when x lies on Y.
Extended<FormalLog> local_height_Y(const SubschemeSpec& Y, const WPoint& x, const Place& v);

// Sum of local heights over all places. InfiniteHeightError if x lies on Y.
FormalLog global_height_Y(const SubschemeSpec& Y, const WPoint& x);

// Finite-place part of global_height_Y.
FormalLog finite_height_Y(const SubschemeSpec& Y, const WPoint& x);

struct GcdY {
  FormalLog log_gcd;   // log gcd(|f_1(a)|, ..., |f_t(a)|)
  FormalLog residual;  // log_gcd minus the finite local heights
  bool exact;          // gcd(a) = 1, where the residual vanishes
};

// DomainError if every f_j(a) vanishes, or if require_unit_content is set
// and gcd(a_0, ..., a_n) != 1.
GcdY log_gcd_Y(const SubschemeSpec& Y, std::span<const Integer> alpha, bool require_unit_content);

}  // namespace wproj
