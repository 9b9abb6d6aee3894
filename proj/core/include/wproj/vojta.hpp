#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wproj/formal_log.hpp"
#include "wproj/integer.hpp"
#include "wproj/subscheme.hpp"

namespace wproj {

struct ScanConfig {
  SubschemeSpec spec;                 // Z = V(f_1, ..., f_t), asserted codim r >= 2
  std::vector<Integer> S;             // finite primes
  std::vector<Rational> eps_grid;
  std::vector<Rational> delta_grid;
  std::vector<std::int64_t> box;      // |alpha_i| <= box_i
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  bool require_unit_content = false;  // gcd(alpha) = 1 on top of wgcd = 1
  unsigned jobs = 1;
};

struct ScanRecord {
  std::vector<Integer> alpha;
  bool on_Z = false;      // every f_j(alpha) = 0: lhs is infinite, nothing to test
  bool boundary = false;  // some alpha_i = 0: no S-unit term, no margins
  FormalLog lhs;          // log gcd(f_j(alpha))
  FormalLog height_term;  // log max_i |alpha_i|^{1/q_i}
  std::optional<FormalLog> sunit_term;  // (1/m) log |alpha_0 ... alpha_n|'_S
  std::vector<FormalLog> margins;       // cell (e, d) at e * |delta_grid| + d

  bool has_margins() const { return !margins.empty(); }
};

struct ScanCell {
  Rational eps;
  Rational delta;
  std::uint64_t evaluated = 0;
  std::uint64_t violations = 0;   // margin < 0
  FormalLog empirical_C;          // max(0, max over records of -margin)
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanRecord> records;  // in sample order
  std::vector<ScanCell> cells;      // eps-major
  std::uint64_t boundary_records = 0;
  std::uint64_t on_Z_records = 0;
  std::uint64_t rejected_samples = 0;  // failed the wgcd / gcd filter

  const ScanCell& cell(std::size_t e, std::size_t d) const { return cells[e * config.delta_grid.size() + d]; }
};

// margin = eps * height_term + sunit_term / (r - 1 + delta) - lhs.
FormalLog margin(const FormalLog& lhs, const FormalLog& height_term, const FormalLog& sunit_term, unsigned r,
                 const Rational& eps, const Rational& delta);

// Everything about one tuple, from the tuple and the configuration alone.
ScanRecord evaluate_record(const ScanConfig& config, std::vector<Integer> alpha);

// ConfigError for r < 2, empty grids, nonpositive grid values, a box of the
// wrong length or radius < 1.
void validate(const ScanConfig& config);

// Samples are drawn from per-index streams, so the report does not depend on
// the number of workers.
ScanReport scan(const ScanConfig& config);

struct DeltaEstimate {
  Rational eps;
  std::optional<Rational> delta;  // smallest grid delta within the threshold
  Rational violation_fraction;    // at that delta (or at the largest delta if none)
  std::vector<std::size_t> violating;  // record indices violating at that delta
};

std::vector<DeltaEstimate> estimate_delta(const ScanReport& report, const Rational& allowed_violation_fraction);

struct ExceptionalCandidate {
  std::size_t record;
  std::vector<std::size_t> zero_coords;
  std::vector<std::pair<std::size_t, std::size_t>> equal_coords;
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> pair_gcds;  // gcd > 1
  Integer gcd;
  bool verified = false;  // recomputed margins agree and are all negative
};

// Records violating in every grid cell, with structural hints.
std::vector<ExceptionalCandidate> exceptional_candidates(const ScanReport& report);

}  // namespace wproj
