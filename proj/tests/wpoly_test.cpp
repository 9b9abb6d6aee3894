#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "wproj/error.hpp"
#include "wproj/factor.hpp"
#include "wproj/poly.hpp"
#include "wproj/subscheme.hpp"
#include "wproj/valuation.hpp"

using namespace wproj;
using namespace wproj::testing;

namespace {

const std::string kL2Path = std::string(WPROJ_DATA_DIR) + "/l2.wpoly";

VariableTable xyz() { return VariableTable::parse("weights: x0=1 x1=2 x2=3"); }

SubschemeSpec axes_Y() {
  return SubschemeSpec({WPoly::parse("x1", xyz()), WPoly::parse("x2", xyz())}, 2);
}

// Random weighted form of degree d over w with up to k terms.
WPoly random_form(const VariableTable& vars, std::uint64_t d, int k) {
  const auto& w = vars.weights();
  std::vector<std::vector<std::uint32_t>> monos;
  std::vector<std::uint32_t> e(w.size());
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == w.size()) {
      if (left % w[i] == 0) {
        e[i] = static_cast<std::uint32_t>(left / w[i]);
        monos.push_back(e);
      }
      return;
    }
    for (std::uint64_t t = 0; t * w[i] <= left; ++t) {
      e[i] = static_cast<std::uint32_t>(t);
      rec(i + 1, left - t * w[i]);
    }
  };
  rec(0, d);
  std::vector<Term> terms;
  for (int j = 0; j < k; ++j) {
    Integer c = big(uniform(-9, 9));
    if (c == 0) c = 1;
    terms.push_back({c, monos[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(monos.size()) - 1))]});
  }
  try {
    return WPoly(vars, terms);
  } catch (const ParseError&) {  // everything cancelled
    return random_form(vars, d, k);
  }
}

}  // namespace

TEST(WPolyParse, L2File) {
  const auto polys = read_wpoly_file(kL2Path);
  ASSERT_EQ(polys.size(), 1u);
  const WPoly& f = polys[0];
  EXPECT_EQ(f.degree(), 30u);
  EXPECT_EQ(f.terms().size(), 34u);
  EXPECT_EQ(f.weights(), weights({2, 4, 6, 10}));
  EXPECT_EQ(f.vars().names(), (std::vector<std::string>{"x", "y", "z", "w"}));
}

TEST(WPolyParse, Examples) {
  const auto vars = VariableTable::indexed(weights({1, 2}));
  EXPECT_EQ(WPoly::parse("x0^2 + x1", vars).degree(), 2u);
  try {
    WPoly::parse("x0 + x1", vars);
    FAIL() << "inhomogeneous input accepted";
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("x0"), std::string::npos) << msg;
    EXPECT_NE(msg.find('1'), std::string::npos) << msg;
    EXPECT_NE(msg.find('2'), std::string::npos) << msg;
  }
  EXPECT_THROW(WPoly::parse("x0^2 + t", vars), ParseError);
  EXPECT_THROW(WPoly::parse("x0^2 + + x1", vars), ParseError);
  EXPECT_THROW(WPoly::parse("x0^2 - x0^2", vars), ParseError);
  EXPECT_THROW(WPoly::parse("3", vars), ParseError);
  try {
    WPoly::parse("x0^2 + x1 ^", vars);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("column 12"), std::string::npos) << e.what();
  }
  // juxtaposition, '*', repeated factors and like terms
  const auto f = WPoly::parse("2 x0 x0 * x1 - x1 x0^2 + 3*x1^2", vars);
  EXPECT_EQ(f, WPoly::parse("x0^2 x1 + 3 x1^2", vars));
  EXPECT_EQ(f.terms().size(), 2u);
}

TEST(WPolyParse, HeaderAndFile) {
  EXPECT_THROW(VariableTable::parse("weights: x=2 x=3"), ParseError);
  EXPECT_THROW(VariableTable::parse("weights: x=0 y=3"), ParseError);
  const auto polys = parse_wpoly_file("# two stanzas\nweights: a=1 b=1\na^2 -\n  b^2\n\nweights: a=1 b=2\nb + a^2\n");
  ASSERT_EQ(polys.size(), 2u);
  EXPECT_EQ(polys[0].to_string(), "a^2 - b^2");
  EXPECT_EQ(polys[1].degree(), 2u);
  EXPECT_THROW(parse_wpoly_file("a + b\n"), ParseError);
  EXPECT_THROW(read_wpoly_file("/nonexistent/file.wpoly"), ConfigError);
}

TEST(WPolyEval, Examples) {
  const auto vars = VariableTable::indexed(weights({1, 2}));
  const auto f = WPoly::parse("x1", vars);
  EXPECT_EQ(f.eval(std::vector<Integer>{Integer(1), Integer(4)}), 4);
  EXPECT_THROW(f.eval(std::vector<Integer>{Integer(1)}), DomainError);

  const auto l2 = read_wpoly_file(kL2Path).front();
  auto at = [&](long a, long b, long c, long d) {
    return l2.eval(std::vector<Integer>{Integer(a), Integer(b), Integer(c), Integer(d)});
  };
  EXPECT_EQ(at(1, 0, 0, 0), 0);
  // Values from an independent symbolic evaluation of the printed polynomial.
  EXPECT_EQ(at(1, 1, 1, 1), Integer("-127484175537"));
  EXPECT_EQ(at(2, -3, 5, 7), Integer("-41131869735168"));
  EXPECT_EQ(at(-7, 11, -13, 17), Integer("-653960410913113"));
  EXPECT_EQ(at(-2, -8, 14, 1), 0);
}

TEST(WPoly, Homogeneity) {
  const auto vars = xyz();
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t d = static_cast<std::uint64_t>(uniform(1, 12));
    const WPoly f = random_form(vars, d, 4);
    const auto a = random_tuple(3, 20);
    const Integer lambda = big(uniform(-5, 5));
    std::vector<Integer> b(3);
    for (std::size_t k = 0; k < 3; ++k) b[k] = pow(lambda, vars.weights()[k]) * a[k];
    EXPECT_EQ(f.eval(b), pow(lambda, d) * f.eval(a));
  }
}

TEST(WPoly, PrintParseRoundTrip) {
  const auto vars = xyz();
  for (int i = 0; i < 300; ++i) {
    const WPoly f = random_form(vars, static_cast<std::uint64_t>(uniform(1, 12)), 6);
    const std::string text = f.to_string();
    const WPoly g = WPoly::parse(text, vars);
    EXPECT_EQ(g, f);
    EXPECT_EQ(g.to_string(), text);
  }
  const auto l2 = read_wpoly_file(kL2Path).front();
  EXPECT_EQ(WPoly::parse(l2.to_string(), l2.vars()), l2);
  EXPECT_EQ(parse_wpoly_file(l2.vars().to_string() + "\n" + l2.to_string() + "\n").front(), l2);
}

TEST(WPoly, GrevlexOrder) {
  const auto vars = VariableTable::indexed(weights({1, 1, 1}));
  const auto f = WPoly::parse("x2^2 + x0 x2 + x1^2 + x0^2 + x1 x2 + x0 x1", vars);
  EXPECT_EQ(f.to_string(), "x0^2 + x0 x1 + x1^2 + x0 x2 + x1 x2 + x2^2");
}

TEST(SubschemeHeight, LocalExamples) {
  const auto Y = axes_Y();
  const auto x = WPoint(Y.weights(), {Integer(1), Integer(4), Integer(8)});
  EXPECT_EQ(local_height_Y(Y, x, Place::finite(Integer(2))).value(), 2 * L(2));
  EXPECT_TRUE(local_height_Y(Y, x, Place::finite(Integer(3))).value().is_zero());
  EXPECT_TRUE(local_height_Y(Y, x, Place::infinite()).value().is_zero());
  const auto on = WPoint(Y.weights(), {Integer(1), Integer(0), Integer(0)});
  EXPECT_TRUE(local_height_Y(Y, on, Place::finite(Integer(2))).is_infinite());
  EXPECT_TRUE(local_height_Y(Y, on, Place::infinite()).is_infinite());
}

TEST(SubschemeHeight, GlobalExamples) {
  const auto Y = axes_Y();
  EXPECT_EQ(global_height_Y(Y, WPoint(Y.weights(), {Integer(1), Integer(4), Integer(8)})), 2 * L(2));
  EXPECT_TRUE(global_height_Y(Y, WPoint(Y.weights(), {Integer(1), Integer(1), Integer(1)})).is_zero());
  EXPECT_EQ(global_height_Y(Y, WPoint(Y.weights(), {Integer(1), Integer(6), Integer(6)})), L(2) + L(3));
  EXPECT_THROW(global_height_Y(Y, WPoint(Y.weights(), {Integer(5), Integer(0), Integer(0)})), InfiniteHeightError);
  // invariant under the action
  const auto x = WPoint(Y.weights(), {Integer(3), Integer(5), Integer(-7)});
  EXPECT_EQ(global_height_Y(Y, act(Rational(6), x)), global_height_Y(Y, x));
}

TEST(LogGcdY, Examples) {
  const auto Y = axes_Y();
  auto lg = [&](long a, long b, long c) {
    return log_gcd_Y(Y, std::vector<Integer>{Integer(a), Integer(b), Integer(c)}, false);
  };
  EXPECT_EQ(lg(1, 4, 8).log_gcd, 2 * L(2));
  EXPECT_TRUE(lg(1, 4, 8).residual.is_zero());
  EXPECT_TRUE(lg(5, 1, 8).log_gcd.is_zero());
  EXPECT_EQ(lg(1, 0, 8).log_gcd, 3 * L(2));
  EXPECT_THROW(lg(1, 0, 0), DomainError);
  EXPECT_THROW(log_gcd_Y(Y, std::vector<Integer>{Integer(2), Integer(4), Integer(8)}, true), DomainError);
  // wgcd = 1 but gcd = 2: the identity holds only up to the residual.
  const auto g = lg(2, 4, 8);
  EXPECT_FALSE(g.exact);
  EXPECT_EQ(g.log_gcd, 2 * L(2));
  EXPECT_EQ(g.residual, g.log_gcd - finite_height_Y(Y, WPoint(Y.weights(), {Integer(2), Integer(4), Integer(8)})));
}

// Prop. p-whp in exact form: with gcd(alpha) = 1 the finite local heights add
// up to log gcd(f_j(alpha)) on the nose.
TEST(LogGcdY, ExactFormOnUnitContent) {
  const auto vars = xyz();
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const SubschemeSpec Y = i % 2 ? axes_Y()
                                  : SubschemeSpec({random_form(vars, static_cast<std::uint64_t>(uniform(1, 12)), 3),
                                                   random_form(vars, static_cast<std::uint64_t>(uniform(1, 12)), 3)},
                                                  2);
    auto a = random_tuple(3, 60);
    const Integer g = gcd_of(a);
    for (auto& v : a) v /= g;
    const auto vals = Y.values(a);
    if (std::all_of(vals.begin(), vals.end(), [](const Integer& v) { return v == 0; })) continue;
    const WPoint x(Y.weights(), a);
    FormalLog sum;
    for (const auto& p : prime_support(gcd_of(vals))) sum += local_height_Y(Y, x, Place::finite(p)).value();
    const auto r = log_gcd_Y(Y, a, true);
    EXPECT_EQ(sum, r.log_gcd);
    EXPECT_EQ(finite_height_Y(Y, x), r.log_gcd);
    EXPECT_TRUE(r.residual.is_zero());
    ++checked;
  }
  EXPECT_GT(checked, 900);
}
