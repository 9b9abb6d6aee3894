#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wproj/integer.hpp"
#include "wproj/point.hpp"
#include "wproj/poly.hpp"
#include "wproj/weights.hpp"

namespace wproj {

struct SearchConfig {
  WeightVector w;
  Rational bound;                       // B
  std::optional<WPoly> hypersurface;    // f, weights must match w
  std::vector<std::size_t> nonvanishing;  // indices required nonzero
  unsigned jobs = 1;
  bool phase2 = true;      // deflation phases
  bool line_solve = true;  // solve two-coordinate supports algebraically (hypersurface only)
};

struct SearchHit {
  WPoint point;
  Integer wh_m;  // wh(x)^m
  std::uint64_t support;  // bitmask of nonzero coordinates
};

struct SearchStats {
  std::uint64_t phase1_candidates = 0;
  std::uint64_t phase2_candidates = 0;
  std::uint64_t deflation_leaves = 0;  // (support, prime pattern) boxes scanned in phase 2
  std::uint64_t line_solves = 0;
  std::uint64_t singleton_checks = 0;
  double wall_seconds = 0;
  unsigned jobs = 1;
};

struct SearchResult {
  std::vector<SearchHit> points;
  SearchStats stats;
};

// floor(B^m); a point has wh <= B iff wh_m_power <= this.
Integer height_budget(const WeightVector& w, const Rational& B);

// Every canonical point with wh <= B, sorted by (wh^m, coordinate key).
// The hypersurface field is ignored.
SearchResult enumerate_bounded(const SearchConfig& config);

// Canonical points on V(f) with wh <= B. ConfigError without a hypersurface.
SearchResult search_hypersurface(const SearchConfig& config);

// Oracles for tests.
// All in-box tuples with wh <= B, canonicalized and deduplicated.
std::vector<WPoint> brute_force_oracle(const WeightVector& w, const Rational& B, std::span<const std::int64_t> radii);
// Primitive points of P^n with H <= B^m lifted through the Veronese map.
std::vector<WPoint> veronese_oracle(const WeightVector& w, const Rational& B);

// Sort order of every point list produced here.
bool point_order_less(const WPoint& a, const WPoint& b);
void sort_points(std::vector<WPoint>& points);

}  // namespace wproj
