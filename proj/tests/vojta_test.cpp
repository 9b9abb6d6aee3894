#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "wproj/error.hpp"
#include "wproj/factor.hpp"
#include "wproj/height.hpp"
#include "wproj/valuation.hpp"
#include "wproj/vojta.hpp"

using namespace wproj;
using namespace wproj::testing;

namespace {

VariableTable xyz() { return VariableTable::parse("weights: x0=1 x1=2 x2=3"); }

ScanConfig axes_config(std::uint64_t samples = 1000, unsigned jobs = 1) {
  ScanConfig c{SubschemeSpec({WPoly::parse("x1", xyz()), WPoly::parse("x2", xyz())}, 2),
               {Integer(2), Integer(3)},
               {Q("1/4"), Q("1/2"), Rational(1)},
               {Q("1/4"), Q("1/2"), Rational(1)},
               {100, 100, 100},
               samples};
  c.seed = 42;
  c.jobs = jobs;
  return c;
}

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Report built from chosen records, aggregated the same way scan() does.
ScanReport synthetic(const ScanConfig& c, const std::vector<std::vector<Integer>>& alphas) {
  ScanReport r{c, {}, {}, 0, 0, 0};
  for (const auto& e : c.eps_grid)
    for (const auto& d : c.delta_grid) r.cells.push_back({e, d, 0, 0, FormalLog()});
  for (const auto& a : alphas) {
    r.records.push_back(evaluate_record(c, a));
    const auto& rec = r.records.back();
    for (std::size_t k = 0; k < rec.margins.size(); ++k) {
      ++r.cells[k].evaluated;
      if (rec.margins[k].sign() < 0) {
        ++r.cells[k].violations;
        r.cells[k].empirical_C = flog_max(r.cells[k].empirical_C, -rec.margins[k]);
      }
    }
  }
  return r;
}

}  // namespace

TEST(Vojta, WorkedExample) {
  auto c = axes_config();
  c.S = {};
  c.eps_grid = {Q("1/2")};
  c.delta_grid = {Q("1/2")};
  const auto rec = evaluate_record(c, ints({1, 2, 2}));
  EXPECT_EQ(rec.lhs, L(2));
  EXPECT_EQ(rec.height_term, L(2, Q("1/2")));
  ASSERT_TRUE(rec.sunit_term);
  EXPECT_EQ(*rec.sunit_term, FormalLog::log_abs(Rational(4)) * Q("1/6"));
  ASSERT_EQ(rec.margins.size(), 1u);
  // (1/2)(1/2) log 2 + (1/3) log 2 / (3/2) - log 2
  EXPECT_EQ(rec.margins[0], L(2, Q("-19/36")));
  EXPECT_EQ(margin(rec.lhs, rec.height_term, *rec.sunit_term, 2, Q("1/2"), Q("1/2")), rec.margins[0]);
}

TEST(Vojta, BoundaryAndOnZ) {
  const auto c = axes_config();
  const auto on = evaluate_record(c, ints({5, 0, 0}));
  EXPECT_TRUE(on.on_Z);
  EXPECT_FALSE(on.has_margins());
  const auto b = evaluate_record(c, ints({0, 4, 8}));
  EXPECT_TRUE(b.boundary);
  EXPECT_FALSE(b.sunit_term);
  EXPECT_EQ(b.lhs, 2 * L(2));
  EXPECT_FALSE(b.has_margins());
}

TEST(Vojta, Validation) {
  auto c = axes_config();
  c.spec = SubschemeSpec({WPoly::parse("x1", xyz())}, 1);
  EXPECT_THROW(scan(c), ConfigError);
  c = axes_config();
  c.eps_grid.clear();
  EXPECT_THROW(scan(c), ConfigError);
  c = axes_config();
  c.delta_grid = {Rational(0)};
  EXPECT_THROW(scan(c), ConfigError);
  c = axes_config();
  c.box = {10, 10};
  EXPECT_THROW(scan(c), ConfigError);
  c = axes_config();
  c.box = {10, 0, 10};
  EXPECT_THROW(scan(c), ConfigError);
}

TEST(Vojta, DeterministicAcrossJobs) {
  const auto a = scan(axes_config(1000, 1));
  for (unsigned j : {2u, 4u, 7u}) {
    const auto b = scan(axes_config(1000, j));
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      EXPECT_EQ(a.records[i].alpha, b.records[i].alpha);
      EXPECT_EQ(a.records[i].margins, b.records[i].margins);
    }
    EXPECT_EQ(a.rejected_samples, b.rejected_samples);
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
      EXPECT_EQ(a.cells[k].violations, b.cells[k].violations);
      EXPECT_EQ(a.cells[k].empirical_C, b.cells[k].empirical_C);
    }
  }
  auto other = axes_config(1000, 1);
  other.seed = 43;
  EXPECT_NE(scan(other).records.front().alpha, a.records.front().alpha);
}

TEST(Vojta, RecordsCrossChecked) {
  auto c = axes_config(2000, 4);
  const auto r = scan(c);
  const auto& w = c.spec.weights();
  std::uint64_t gcd1 = 0;
  for (const auto& rec : r.records) {
    const WPoint x(w, rec.alpha);
    EXPECT_EQ(x.wgcd(), 1);
    // independent gcd: the forms are the coordinates x1 and x2 themselves
    const long g = std::gcd(rec.alpha[1].get_si(), rec.alpha[2].get_si());
    if (g == 0) {
      EXPECT_TRUE(rec.on_Z);
      continue;
    }
    EXPECT_EQ(rec.lhs, FormalLog::log_abs(Rational(g)));
    EXPECT_EQ(rec.height_term, local_height(x, Place::infinite()));
    if (gcd_of(rec.alpha) == 1) {
      EXPECT_EQ(rec.lhs, finite_height_Y(c.spec, x));
      ++gcd1;
    }
    if (!rec.has_margins()) continue;
    const std::size_t nd = c.delta_grid.size();
    for (std::size_t e = 0; e < c.eps_grid.size(); ++e) {
      for (std::size_t d = 0; d < nd; ++d) {
        const auto& m = rec.margins[e * nd + d];
        if (e + 1 < c.eps_grid.size()) EXPECT_TRUE(flog_compare(m, rec.margins[(e + 1) * nd + d]) <= 0);
        if (d + 1 < nd) EXPECT_TRUE(flog_compare(m, rec.margins[e * nd + d + 1]) >= 0);
      }
    }
    if (g == 1)
      for (const auto& m : rec.margins) EXPECT_GE(m.sign(), 0);
  }
  EXPECT_GT(gcd1, 1000u);
  std::uint64_t boundary = 0;
  for (const auto& rec : r.records) boundary += rec.boundary;
  EXPECT_EQ(boundary, r.boundary_records);
}

TEST(Vojta, UnitContentFilter) {
  auto c = axes_config(300);
  c.require_unit_content = true;
  for (const auto& rec : scan(c).records) EXPECT_EQ(gcd_of(rec.alpha), 1);
}

TEST(EstimateDelta, Examples) {
  auto c = axes_config();
  c.S = {};
  c.eps_grid = {Q("1/2")};
  c.delta_grid = {Q("1/4"), Q("1/2"), Rational(1)};
  // Margins fall as delta grows, so a tuple can violate at delta = 1 alone
  // but never at delta = 1/4 alone.
  std::vector<Integer> only_one, everywhere;
  for (long a = 1; a < 60; ++a)
    for (long b = 1; b < 60; ++b) {
      const auto rec = evaluate_record(c, ints({a, b, b}));
      if (!rec.has_margins()) continue;
      if (only_one.empty() && rec.margins[1].sign() >= 0 && rec.margins[2].sign() < 0) only_one = rec.alpha;
      if (everywhere.empty() && rec.margins[0].sign() < 0) everywhere = rec.alpha;
    }
  ASSERT_FALSE(only_one.empty());
  ASSERT_FALSE(everywhere.empty());

  const auto clean = synthetic(c, {ints({1, 1, 1}), ints({3, 5, 7})});
  auto est = estimate_delta(clean, Rational(0));
  ASSERT_EQ(est.size(), 1u);
  EXPECT_EQ(*est[0].delta, Q("1/4"));

  const auto one = synthetic(c, {ints({1, 1, 1}), only_one});
  est = estimate_delta(one, Rational(0));
  EXPECT_EQ(*est[0].delta, Q("1/4"));
  EXPECT_TRUE(est[0].violating.empty());

  const auto bad = synthetic(c, {ints({1, 1, 1}), everywhere});
  est = estimate_delta(bad, Rational(0));
  EXPECT_FALSE(est[0].delta.has_value());
  EXPECT_EQ(est[0].violating, std::vector<std::size_t>{1});
  est = estimate_delta(bad, Rational(1));
  EXPECT_EQ(*est[0].delta, Q("1/4"));
  EXPECT_EQ(est[0].violating, std::vector<std::size_t>{1});
  EXPECT_EQ(est[0].violation_fraction, Q("1/2"));
  est = estimate_delta(bad, Q("1/2"));
  EXPECT_EQ(*est[0].delta, Q("1/4"));

  c.eps_grid.clear();
  EXPECT_THROW(estimate_delta(ScanReport{c, {}, {}, 0, 0, 0}, Rational(0)), ConfigError);
}

TEST(ExceptionalCandidates, DiagonalFamily) {
  auto c = axes_config();
  c.S = {};
  EXPECT_TRUE(exceptional_candidates(synthetic(c, {ints({1, 1, 1}), ints({5, 3, 7})})).empty());
  // alpha_1 = alpha_2 = k with a large common factor violates everywhere
  const auto r = synthetic(c, {ints({1, 1, 1}), ints({1, 64, 64}), ints({7, 30, 30})});
  const auto cands = exceptional_candidates(r);
  ASSERT_FALSE(cands.empty());
  for (const auto& cand : cands) {
    EXPECT_TRUE(cand.verified);
    EXPECT_EQ(cand.equal_coords, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}}));
    for (const auto& m : r.records[cand.record].margins) EXPECT_LT(m.sign(), 0);
  }
  EXPECT_EQ(cands.front().record, 1u);
}
