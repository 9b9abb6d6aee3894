// Acceptance run: one PASS/FAIL line per criterion. Tolerances are zero
// throughout (every comparison is exact FormalLog or integer equality).
//
//   acceptance            all criteria
//   acceptance 2 7a 9     a subset

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "support.hpp"
#include "wproj/error.hpp"
#include "wproj/factor.hpp"
#include "wproj/height.hpp"
#include "wproj/poly.hpp"
#include "wproj/search.hpp"
#include "wproj/subscheme.hpp"
#include "wproj/valuation.hpp"
#include "wproj/vojta.hpp"
#include "wproj_cli/cli.hpp"

using namespace wproj;
using namespace wproj::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

const std::vector<WeightVector>& weight_sets() {
  static const std::vector<WeightVector> ws = {weights({1, 2, 3}), weights({2, 4, 6, 10}), weights({2, 3}),
                                               weights({1, 1, 1})};
  return ws;
}

WPoint random_point(const WeightVector& w, int i) {
  return WPoint(w, i % 2 ? smooth_tuple(w.size(), 47, 6) : random_tuple(w.size(), 100000));
}

Outcome l2_reproduction() {
  SearchConfig c{weights({2, 4, 6, 10}), Rational(2)};
  c.hypersurface = read_wpoly_file(std::string(WPROJ_DATA_DIR) + "/l2.wpoly").front();
  c.jobs = workers();
  const auto r = search_hypersurface(c);
  std::vector<std::string> bad;
  for (const auto& h : r.points)
    if (h.point[3] != 0) bad.push_back(h.point.to_string());
  std::ostringstream s;
  s << r.points.size() << " solutions, " << bad.size() << " with w != 0; phase1 " << r.stats.phase1_candidates
    << ", phase2 " << r.stats.phase2_candidates << " candidates; " << r.stats.wall_seconds << " s on " << r.stats.jobs
    << " workers";
  if (!bad.empty()) {
    s << "; e.g.";
    for (std::size_t i = 0; i < std::min<std::size_t>(4, bad.size()); ++i) s << " [" << bad[i] << "]";
  }
  return {bad.empty(), s.str()};
}

Outcome veronese_identity() {
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& w = weight_sets()[i % 4];
    const WPoint x = random_point(w, i);
    if (lwh(x) * Rational(w.lcm()) != FormalLog::log_abs(Rational(wh_m_power(x)))) ++bad;
  }
  return {bad == 0, "10000 points, " + std::to_string(bad) + " mismatches"};
}

Outcome representative_invariance() {
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& w = weight_sets()[i % 4];
    const WPoint x = random_point(w, i);
    const Rational lambda(big(uniform(1, 1000)) * (uniform(0, 1) ? 1 : -1), big(uniform(1, 1000)));
    const WPoint y = integralize(scaled(lambda, x), w).point;
    if (lwh(y) != lwh(x)) ++bad;
  }
  return {bad == 0, "1000 (lambda, x) pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome wgcd_oracle() {
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& w = weight_sets()[i % 4];
    const auto x = smooth_tuple(w.size(), 50, 6);
    if (wgcd(w, x) != wgcd_by_divisors(w, x)) ++bad;
  }
  return {bad == 0, "10000 tuples, primes <= 47, " + std::to_string(bad) + " mismatches"};
}

WPoly random_form(const VariableTable& vars, std::uint64_t d) {
  const auto& w = vars.weights();
  std::vector<std::vector<std::uint32_t>> monos;
  for (std::uint32_t a = 0; a <= d; ++a)
    for (std::uint32_t b = 0; a + 2 * b <= d; ++b)
      if ((d - a - 2 * b) % 3 == 0) monos.push_back({a, b, static_cast<std::uint32_t>((d - a - 2 * b) / 3)});
  (void)w;
  while (true) {
    std::vector<Term> terms;
    for (int j = 0; j < 3; ++j) {
      Integer c = big(uniform(-9, 9));
      if (c == 0) c = 1;
      terms.push_back({c, monos[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(monos.size()) - 1))]});
    }
    try {
      return WPoly(vars, terms);
    } catch (const ParseError&) {
    }
  }
}

Outcome exact_gcd_form() {
  const auto vars = VariableTable::parse("weights: x0=1 x1=2 x2=3");
  const SubschemeSpec axes({WPoly::parse("x1", vars), WPoly::parse("x2", vars)}, 2);
  int bad = 0, checked = 0;
  while (checked < 1000) {
    const SubschemeSpec Y = checked % 2 ? axes
                                        : SubschemeSpec({random_form(vars, static_cast<std::uint64_t>(uniform(1, 12))),
                                                         random_form(vars, static_cast<std::uint64_t>(uniform(1, 12)))},
                                                        2);
    auto a = random_tuple(3, 200);
    const Integer g = gcd_of(a);
    for (auto& v : a) v /= g;
    const auto vals = Y.values(a);
    const Integer G = gcd_of(vals);
    if (G == 0) continue;
    const WPoint x(Y.weights(), a);
    FormalLog sum;
    for (const auto& p : prime_support(G)) sum += local_height_Y(Y, x, Place::finite(p)).value();
    if (sum != FormalLog::log_abs(Rational(G)) || sum != log_gcd_Y(Y, a, true).log_gcd) ++bad;
    ++checked;
  }
  return {bad == 0, "1000 points with gcd 1 over {x1,x2} and random form pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome sing1_implication() {
  std::set<std::string> zero, counter;
  for (const auto& w : {weights({1, 2, 3}), weights({1, 2, 3, 5})}) {
    const long R = 20;
    std::vector<Integer> x(w.size());
    std::vector<long> v(w.size(), -R);
    while (true) {
      bool nonzero = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        x[i] = v[i];
        nonzero = nonzero || v[i] != 0;
      }
      if (nonzero) {
        const WPoint p(w, x);
        if (log_hwgcd_point(p).is_zero()) {
          const std::string key = "[" + canonicalize(p).to_string() + "] in P(" + w.to_string() + ")";
          zero.insert(key);
          if (!is_singular(w, p.coords())) counter.insert(key);
        }
      }
      std::size_t k = 0;
      while (k < v.size() && v[k] == R) v[k++] = -R;
      if (k == v.size()) break;
      ++v[k];
    }
  }
  std::ostringstream s;
  s << "boxes |x_i| <= 20: " << zero.size() << " points with log hwgcd = 0, " << counter.size() << " not singular";
  const std::string pinned = "[1:1:1] in P(1,2,3)";
  if (counter.count(pinned)) s << "; witness " << pinned;
  return {counter.empty(), s.str()};
}

Outcome classical_heights() {
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    std::vector<std::uint64_t> ones(n, 1);
    const WeightVector w(ones);
    const auto c = random_tuple(n, 100000);
    const Integer g = gcd_of(c);
    Integer mx = 0;
    for (const auto& v : c) mx = std::max(mx, Integer(abs(v) / g));
    const WPoint x(w, c);
    if (lwh(x) != FormalLog::log_abs(Rational(mx)) || wh_m_power(x) != mx) ++bad;
  }
  return {bad == 0, "1000 points in P^1..P^3, " + std::to_string(bad) + " mismatches"};
}

Outcome classical_positivity() {
  int nonpositive = 0;
  std::string example;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    std::vector<std::uint64_t> ones(n, 1);
    const WeightVector w(ones);
    const WPoint x = canonicalize(WPoint(w, random_tuple(n, 100000)));
    if (log_hwgcd_point(x).sign() <= 0) {
      ++nonpositive;
      if (example.empty()) example = x.to_string();
    }
  }
  return {nonpositive == 0, "1000 canonical points in P^1..P^3, " + std::to_string(nonpositive) +
                                " with log hwgcd <= 0" + (example.empty() ? "" : " (e.g. [" + example + "] gives 0)")};
}

Outcome hgcd_is_log_gcd() {
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    long a = 0, b = 0;
    while (a == 0) a = static_cast<long>(uniform(-10000, 10000));
    while (b == 0) b = static_cast<long>(uniform(-10000, 10000));
    if (hgcd(Rational(a), Rational(b)) != FormalLog::log_abs(Rational(std::gcd(a, b)))) ++bad;
  }
  return {bad == 0, "1000 pairs in [-10^4, 10^4]^2, " + std::to_string(bad) + " mismatches"};
}

Outcome search_completeness() {
  std::ostringstream s;
  bool ok = true;
  for (const auto& [w, B] : {std::pair{weights({2, 3}), "2"}, {weights({1, 2}), "2"}, {weights({1, 2, 3}), "3/2"}}) {
    const Rational b = Q(B);
    SearchConfig c{w, b};
    c.jobs = workers();
    std::vector<WPoint> found;
    for (const auto& h : enumerate_bounded(c).points) found.push_back(h.point);
    const auto complete = veronese_oracle(w, b);
    std::uint64_t qmax = 0;
    for (auto q : w.weights()) qmax = std::max(qmax, q);
    std::vector<std::int64_t> radii;
    for (auto q : w.weights()) radii.push_back(floor(pow(b, q * qmax)).get_si());
    const auto box = brute_force_oracle(w, b, radii);
    bool box_ok = true;
    for (const auto& p : box) box_ok = box_ok && std::find(found.begin(), found.end(), p) != found.end();
    const bool eq = found == complete;
    ok = ok && eq && box_ok;
    s << "(" << w.to_string() << "; " << B << "): " << found.size() << " points, veronese oracle "
      << (eq ? "equal" : "DIFFERENT") << ", box oracle " << box.size() << (box_ok ? " contained" : " NOT contained")
      << "; ";
  }
  return {ok, s.str()};
}

Outcome vojtalab_checks() {
  const auto vars = VariableTable::parse("weights: x0=1 x1=2 x2=3");
  auto config = [&](unsigned jobs) {
    ScanConfig c{SubschemeSpec({WPoly::parse("x1", vars), WPoly::parse("x2", vars)}, 2),
                 {Integer(2), Integer(3)},
                 {Q("1/4"), Q("1/2"), Rational(1)},
                 {Q("1/4"), Q("1/2"), Rational(1)},
                 {100, 100, 100},
                 1000};
    c.seed = 42;
    c.jobs = jobs;
    return c;
  };
  auto bytes = [](const ScanReport& r) {
    std::ostringstream out;
    cli::render(cli::scan_report(r, Q("1/100"), false), cli::Format::kJson, out);
    return out.str();
  };
  const ScanReport base = scan(config(1));
  const std::string ref = bytes(base);
  bool identical = bytes(scan(config(1))) == ref;
  for (unsigned j : {2u, 4u, 8u}) identical = identical && bytes(scan(config(j))) == ref;

  int lhs_bad = 0, mono_bad = 0;
  const std::size_t nd = base.config.delta_grid.size(), ne = base.config.eps_grid.size();
  for (const auto& rec : base.records) {
    const long g = std::gcd(rec.alpha[1].get_si(), rec.alpha[2].get_si());
    if (g == 0 ? !rec.on_Z : rec.lhs != FormalLog::log_abs(Rational(g))) ++lhs_bad;
    if (!rec.has_margins()) continue;
    for (std::size_t e = 0; e < ne; ++e)
      for (std::size_t d = 0; d < nd; ++d) {
        const auto& m = rec.margins[e * nd + d];
        if (e + 1 < ne && flog_compare(m, rec.margins[(e + 1) * nd + d]) > 0) ++mono_bad;
        if (d + 1 < nd && flog_compare(m, rec.margins[e * nd + d + 1]) < 0) ++mono_bad;
      }
  }
  std::ostringstream s;
  s << "seed 42, 1000 samples: report bytes " << (identical ? "identical" : "DIFFER") << " for jobs 1,1,2,4,8; "
    << lhs_bad << " lhs mismatches; " << mono_bad << " monotonicity violations";
  return {identical && lhs_bad == 0 && mono_bad == 0, s.str()};
}

struct Criterion {
  const char* id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"1", "L2 has no point with wh <= 2 and w != 0 (exact)", l2_reproduction},
      {"2", "m lwh(x) = log wh_m_power(x) (tol 0)", veronese_identity},
      {"3", "lwh(lambda x) = lwh(x) (tol 0)", representative_invariance},
      {"4", "wgcd floor formula = divisor definition (tol 0)", wgcd_oracle},
      {"5", "sum of finite local heights = log gcd f_j (tol 0)", exact_gcd_form},
      {"6", "log hwgcd(x) = 0 implies x singular (no counterexamples)", sing1_implication},
      {"7a", "w = (1,...,1) heights are classical heights (tol 0)", classical_heights},
      {"7b", "w = (1,...,1): log hwgcd > 0 on every point", classical_positivity},
      {"8", "hgcd(a, b) = log gcd(a, b) (tol 0)", hgcd_is_log_gcd},
      {"9", "search = complete oracle, exact set equality", search_completeness},
      {"10", "vojtalab determinism and cross-checks (tol 0)", vojtalab_checks},
  };
  std::set<std::string> only(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s  %-3s %s -- %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
