#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "support.hpp"
#include "wproj/error.hpp"
#include "wproj/height.hpp"

using namespace wproj;
using namespace wproj::testing;

TEST(Classify, Examples) {
  const auto w = weights({2, 4, 6, 10});
  EXPECT_EQ(w.lcm(), 60u);
  EXPECT_EQ(w.gcd(), 2u);
  EXPECT_FALSE(w.reduced());
  EXPECT_FALSE(w.well_formed());

  const auto v = weights({1, 2, 3});
  EXPECT_TRUE(v.reduced());
  EXPECT_TRUE(v.well_formed());
  EXPECT_EQ(v.lcm(), 6u);

  const auto p = weights({1, 1, 1, 1});
  EXPECT_TRUE(p.reduced() && p.well_formed());
  EXPECT_EQ(p.lcm(), 1u);

  EXPECT_THROW(weights({3}), DomainError);
  EXPECT_THROW(weights({1, 0}), DomainError);
  EXPECT_THROW(WeightVector::parse("1,x"), ParseError);
  EXPECT_EQ(WeightVector::parse("2,4,6,10"), w);
  EXPECT_EQ(w.to_string(), "2,4,6,10");
}

TEST(ReduceWeights, Examples) {
  auto r = reduce_weights(weights({2, 4, 6, 10}));
  EXPECT_EQ(r.weights, weights({1, 2, 3, 5}));
  EXPECT_EQ(r.divisor, 2u);
  r = reduce_weights(weights({1, 2, 3}));
  EXPECT_EQ(r.weights, weights({1, 2, 3}));
  EXPECT_EQ(r.divisor, 1u);
  r = reduce_weights(weights({3, 6}));
  EXPECT_EQ(r.weights, weights({1, 2}));
  EXPECT_EQ(r.divisor, 3u);
}

TEST(WellFormalize, Examples) {
  auto f = well_formalize(weights({1, 2, 2}));
  EXPECT_EQ(f.weights, weights({1, 1, 1}));
  ASSERT_EQ(f.steps.size(), 1u);
  EXPECT_EQ(f.steps[0], (WellFormStep{0, 2}));
  EXPECT_EQ(f.transform(std::vector<Integer>{Integer(3), Integer(5), Integer(7)}),
            (std::vector<Integer>{Integer(9), Integer(5), Integer(7)}));

  f = well_formalize(weights({1, 2, 3}));
  EXPECT_TRUE(f.steps.empty());
  f = well_formalize(reduce_weights(weights({2, 4, 6, 10})).weights);
  EXPECT_EQ(f.weights, weights({1, 2, 3, 5}));
  EXPECT_TRUE(f.steps.empty());
  EXPECT_THROW(well_formalize(weights({2, 4})), PreconditionError);
}

// Every weight vector with entries <= 12 and length 2..4 (length 5 sampled).
TEST(WellFormalize, OutputAlwaysWellFormed) {
  std::vector<std::uint64_t> q;
  std::function<void(std::size_t)> rec = [&](std::size_t len) {
    if (q.size() == len) {
      const WeightVector w(q);
      const auto r = reduce_weights(w);
      EXPECT_TRUE(r.weights.reduced());
      EXPECT_TRUE(well_formalize(r.weights).weights.well_formed()) << w.to_string();
      return;
    }
    for (std::uint64_t v = 1; v <= 12; ++v) {
      q.push_back(v);
      rec(len);
      q.pop_back();
    }
  };
  for (std::size_t len = 2; len <= 4; ++len) rec(len);
  for (int i = 0; i < 2000; ++i) {
    std::vector<std::uint64_t> v(5);
    for (auto& x : v) x = static_cast<std::uint64_t>(uniform(1, 12));
    const auto r = reduce_weights(WeightVector(v));
    EXPECT_TRUE(well_formalize(r.weights).weights.well_formed());
  }
}

// Transformed representatives of equivalent points stay equivalent, and
// the transform intertwines the actions (lambda on the old space, lambda^{d'}
// on the new one).
TEST(WellFormalize, TransformRespectsEquivalence) {
  for (const auto& w : {weights({1, 2, 2}), weights({1, 6, 10, 15}), weights({2, 3, 3}), weights({1, 4, 6})}) {
    const auto f = well_formalize(w);
    for (int i = 0; i < 300; ++i) {
      const WPoint x(w, random_tuple(w.size(), 6));
      const Rational lambda(big(uniform(1, 4)) * (uniform(0, 1) ? 1 : -1), big(uniform(1, 3)));
      const auto y = integralize(scaled(lambda, x), w).point;
      const WPoint fx(f.weights, f.transform(x.coords()));
      const WPoint fy(f.weights, f.transform(y.coords()));
      EXPECT_TRUE(equals(fx, fy)) << w.to_string() << " " << x.to_string() << " " << y.to_string();
    }
  }
}

TEST(IsSingular, Examples) {
  const auto w = weights({1, 2, 3, 5});
  EXPECT_TRUE(is_singular(w, point(w, {0, 1, 0, 0}).coords()));
  EXPECT_FALSE(is_singular(w, point(w, {3, 1, 0, 7}).coords()));
  EXPECT_FALSE(is_singular(w, point(w, {0, 0, 1, 1}).coords()));
  EXPECT_TRUE(is_singular(w, point(w, {0, 0, 0, 4}).coords()));
  for (int i = 0; i < 200; ++i) {
    auto c = random_tuple(4, 9);
    if (c[0] == 0) c[0] = 1;
    EXPECT_FALSE(is_singular(w, c));
  }
  const auto bad = weights({2, 4, 6, 10});
  EXPECT_THROW(is_singular(bad, point(bad, {1, 1, 1, 1}).coords()), PreconditionError);
  EXPECT_THROW(is_singular(w, std::vector<Integer>(4)), DomainError);
}

TEST(ReduceWeights, HeightRescalingLaw) {
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t d = static_cast<std::uint64_t>(uniform(2, 5));
    const auto base = i % 2 ? weights({1, 2, 3}) : weights({1, 2, 3, 5});
    std::vector<std::uint64_t> scaled;
    for (auto q : base.weights()) scaled.push_back(q * d);
    const WeightVector w(scaled);
    const auto c = smooth_tuple(base.size(), 13, 4);
    EXPECT_EQ(lwh(WPoint(w, c)), lwh(WPoint(base, c)) * Rational(1, d));
  }
}
