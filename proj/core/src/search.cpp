#include "wproj/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

#include "wproj/error.hpp"
#include "wproj/factor.hpp"
#include "wproj/height.hpp"
#include "wproj/primes.hpp"

namespace wproj {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Arithmetic modulo the Mersenne prime 2^61 - 1, used as an exact-zero filter.
constexpr u64 kMod = (u64{1} << 61) - 1;

u64 mod_reduce(u128 z) {
  u64 r = static_cast<u64>(z & kMod) + static_cast<u64>(z >> 61);
  r = (r & kMod) + (r >> 61);
  return r >= kMod ? r - kMod : r;
}
u64 mulmod(u64 a, u64 b) { return mod_reduce(static_cast<u128>(a) * b); }
u64 addmod(u64 a, u64 b) {
  u64 r = a + b;
  return r >= kMod ? r - kMod : r;
}
u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
u64 to_mod(const Integer& v) { return mpz_fdiv_ui(v.get_mpz_t(), kMod); }
u64 to_mod(std::int64_t v) {
  const u64 a = static_cast<u64>(v < 0 ? -v : v) % kMod;
  return v < 0 && a ? kMod - a : a;
}

u64 abs64(std::int64_t v) { return static_cast<u64>(v < 0 ? -v : v); }

// Budgets in the m-th power domain: a coordinate y_k is admissible when
// |y_k|^{m/q_k} <= budget_k. Exact in u128 when the height budget allows,
// in mpz otherwise.
bool pow_at_most(u128 base, u64 e, u128 limit, u128* out) {
  u128 acc = 1;
  for (u64 i = 0; i < e; ++i) {
    if (base != 0 && acc > limit / base) return false;
    acc *= base;
  }
  if (acc > limit) return false;
  if (out) *out = acc;
  return true;
}
bool pow_at_most(u64 base, u64 e, const Integer& limit, Integer* out) {
  Integer acc;
  mpz_ui_pow_ui(acc.get_mpz_t(), base, e);
  if (acc > limit) return false;
  if (out) *out = std::move(acc);
  return true;
}
double log2_of(u128 v) { return std::log2(static_cast<long double>(v)); }
double log2_of(const Integer& v) {
  long exp;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}
std::int64_t root_of(u128 v, u64 k) {
  if (v == 0) return 0;
  u128 r = static_cast<u128>(std::floor(std::pow(static_cast<long double>(v), 1.0L / static_cast<long double>(k))));
  while (r > 0 && !pow_at_most(r, k, v, nullptr)) --r;
  while (pow_at_most(r + 1, k, v, nullptr)) ++r;
  if (r > (u128{1} << 62)) throw ConfigError("search box too large for a 64-bit scan");
  return static_cast<std::int64_t>(r);
}
std::int64_t root_of(const Integer& v, u64 k) {
  const Integer r = iroot_floor(v, k);
  if (!r.fits_slong_p() || r > (Integer(1) << 62)) throw ConfigError("search box too large for a 64-bit scan");
  return r.get_si();
}

// Exponent pattern of one deflating prime on a support: p^{e_k} || x_k.
struct Pattern {
  std::vector<std::uint32_t> e;  // per support position
  std::vector<u64> gap;          // m e_k / q_k - m min_j e_j / q_j
};

struct RestrictedTerm {
  u64 coeff;
  std::vector<std::uint32_t> exps;  // per support position
};

// Everything about one support J that does not depend on the deflation.
struct Plan {
  std::uint64_t mask = 0;
  std::vector<std::size_t> idx;
  std::vector<u64> root;    // m / q_k
  std::size_t sign_k = 0;   // support position whose y is positive
  std::vector<Pattern> patterns;
  bool scan_all = false;    // no equation to test: every candidate is a point
  std::vector<RestrictedTerm> terms;
};

// One box to scan: y_k in [-r_k, r_k] \ {0}, x_k = prime_part_k * y_k with
// prime_part_k = prod over chosen (p, pattern) of p^{e_k}.
struct Leaf {
  const Plan* plan;
  std::vector<std::int64_t> radius;  // per support position
  std::vector<u64> part_mod;
  std::vector<std::pair<u64, std::uint32_t>> chosen;  // (prime, pattern)
  std::size_t inner = 0;  // widest range, scanned innermost
  bool deflated() const { return !chosen.empty(); }
};

struct Context {
  const SearchConfig& config;
  const WPoly* poly;
  WeightVector w;
  u64 m;
  Integer budget;
};

std::vector<std::size_t> indices_of(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

std::uint64_t gcd_on(const WeightVector& w, const std::vector<std::size_t>& idx) {
  std::uint64_t g = 0;
  for (auto i : idx) g = std::gcd(g, w[i]);
  return g;
}

// Terms of f that survive setting the coordinates outside the support to 0.
std::vector<const Term*> restricted_terms(const WPoly& f, std::uint64_t mask) {
  std::vector<const Term*> out;
  for (const auto& t : f.terms()) {
    bool ok = true;
    for (std::size_t i = 0; i < t.exps.size() && ok; ++i) ok = t.exps[i] == 0 || (mask >> i & 1);
    if (ok) out.push_back(&t);
  }
  return out;
}

std::vector<Pattern> patterns_for(const Context& ctx, const std::vector<std::size_t>& idx) {
  const std::uint64_t dj = gcd_on(ctx.w, idx);
  const u64 log_budget = mpz_sizeinbase(ctx.budget.get_mpz_t(), 2) - 1;  // floor(log2 budget)
  // e_k / q_k < 1/d_J + log_budget / m bounds every exponent.
  std::vector<std::uint32_t> emax;
  for (auto i : idx) {
    const u64 q = ctx.w[i];
    emax.push_back(static_cast<std::uint32_t>((q * ctx.m / dj + q * log_budget) / ctx.m));
  }
  std::vector<Pattern> out;
  std::vector<std::uint32_t> e(idx.size(), 1);
  while (true) {
    std::vector<u64> scaled(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) scaled[k] = ctx.m / ctx.w[idx[k]] * e[k];
    const u64 low = *std::min_element(scaled.begin(), scaled.end());
    // Canonical at p: min e_k/q_k < 1/d_J.
    if (low * dj < ctx.m) {
      Pattern p{e, {}};
      bool ok = true;
      for (auto s : scaled) {
        p.gap.push_back(s - low);
        ok = ok && s - low <= log_budget;
      }
      if (ok) out.push_back(std::move(p));
    }
    std::size_t k = 0;
    while (k < e.size() && e[k] == emax[k]) e[k++] = 1;
    if (k == e.size()) break;
    ++e[k];
  }
  return out;
}

Plan make_plan(const Context& ctx, std::uint64_t mask, bool scan_all) {
  Plan plan;
  plan.mask = mask;
  plan.idx = indices_of(mask, ctx.w.size());
  plan.scan_all = scan_all;
  const std::uint64_t dj = gcd_on(ctx.w, plan.idx);
  // Same choice as canonicalize: the last index with q_k / d_J odd.
  plan.sign_k = plan.idx.size();
  for (std::size_t k = 0; k < plan.idx.size(); ++k) {
    plan.root.push_back(ctx.m / ctx.w[plan.idx[k]]);
    if ((ctx.w[plan.idx[k]] / dj) % 2 == 1) plan.sign_k = k;
  }
  if (plan.sign_k == plan.idx.size()) throw std::logic_error("no sign coordinate on support");
  if (ctx.config.phase2) plan.patterns = patterns_for(ctx, plan.idx);
  if (!scan_all) {
    for (const Term* t : restricted_terms(*ctx.poly, mask)) {
      RestrictedTerm rt{to_mod(t->coeff), {}};
      for (auto i : plan.idx) rt.exps.push_back(t->exps[i]);
      plan.terms.push_back(std::move(rt));
    }
  }
  return plan;
}

// Walks the deflation tree of one support: every set of distinct primes, each
// with an exponent pattern, whose combined gaps fit the budgets.
template <class Budget>
class Deflation {
 public:
  Deflation(const Plan& plan, Budget budget, const std::function<void(Leaf&&)>& sink)
      : plan_(plan), sink_(sink), budget_(plan.idx.size(), budget), part_mod_(plan.idx.size(), 1) {}

  void run() { node(2); }

 private:
  void node(u64 min_prime) {
    emit();
    if (plan_.patterns.empty()) return;
    const std::size_t K = plan_.idx.size();
    std::vector<double> lg(K);
    for (std::size_t k = 0; k < K; ++k) lg[k] = log2_of(budget_[k]);
    const double lp = std::log2(static_cast<double>(min_prime));
    for (std::uint32_t pi = 0; pi < plan_.patterns.size(); ++pi) {
      const Pattern& pat = plan_.patterns[pi];
      // Quick reject: even the smallest admissible prime does not fit.
      bool maybe = true;
      for (std::size_t k = 0; k < K && maybe; ++k) maybe = static_cast<double>(pat.gap[k]) * lp <= lg[k] + 1e-9;
      if (!maybe) continue;
      for_primes(min_prime, [&](u64 p) {
        std::vector<Budget> pg(K);
        for (std::size_t k = 0; k < K; ++k) {
          if (!pow_at_most(p, pat.gap[k], budget_[k], &pg[k])) return false;
        }
        const auto saved = budget_;
        const auto saved_mod = part_mod_;
        for (std::size_t k = 0; k < K; ++k) {
          budget_[k] /= pg[k];
          part_mod_[k] = mulmod(part_mod_[k], powmod(p % kMod, pat.e[k]));
        }
        chosen_.emplace_back(p, pi);
        node(p + 1);
        chosen_.pop_back();
        budget_ = saved;
        part_mod_ = saved_mod;
        return true;
      });
    }
  }

  // Calls f on primes >= from in increasing order while it returns true.
  template <class F>
  static void for_primes(u64 from, F f) {
    const auto& small = small_primes();
    auto it = std::lower_bound(small.begin(), small.end(), from);
    for (; it != small.end(); ++it) {
      if (!f(*it)) return;
    }
    PrimeStream stream(std::max<u64>(from, static_cast<u64>(small.back()) + 1));
    while (f(stream.next())) {
    }
  }

  void emit() {
    Leaf leaf{&plan_, {}, part_mod_, chosen_, 0};
    for (std::size_t k = 0; k < plan_.idx.size(); ++k) {
      leaf.radius.push_back(root_of(budget_[k], plan_.root[k]));
      if (leaf.radius[k] > leaf.radius[leaf.inner]) leaf.inner = k;
    }
    sink_(std::move(leaf));
  }

  const Plan& plan_;
  const std::function<void(Leaf&&)>& sink_;
  std::vector<Budget> budget_;
  std::vector<u64> part_mod_;
  std::vector<std::pair<u64, std::uint32_t>> chosen_;
};

void build_leaves(const Context& ctx, const Plan& plan, const std::function<void(Leaf&&)>& sink) {
  if (ctx.budget < (Integer(1) << 126)) {
    Deflation<u128>(plan, static_cast<u128>(ctx.budget.get_ui()) |
                              (static_cast<u128>(Integer(ctx.budget >> 64).get_ui()) << 64),
                    sink)
        .run();
  } else {
    Deflation<Integer>(plan, ctx.budget, sink).run();
  }
}

struct Worker {
  std::vector<SearchHit> hits;
  std::uint64_t phase1 = 0;
  std::uint64_t phase2 = 0;
};

// Scans the candidates of one leaf whose first outer coordinate is fixed.
class LeafScan {
 public:
  LeafScan(const Context& ctx, const Leaf& leaf, Worker& out)
      : ctx_(ctx), leaf_(leaf), plan_(*leaf.plan), out_(out), K_(plan_.idx.size()) {
    for (std::size_t k = 0; k < K_; ++k) {
      if (k != leaf.inner) outer_.push_back(k);
    }
  }

  std::vector<std::int64_t> first_values() const { return values_of(outer_[0]); }

  void run(std::int64_t y0) {
    y_.assign(K_, 0);
    y_[outer_[0]] = y0;
    if (!coprime_to_primes(abs64(y0))) return;
    for (std::size_t j = 1; j < outer_.size(); ++j) y_[outer_[j]] = first_value(outer_[j]);
    while (true) {
      bool ok = true;
      for (std::size_t j = 1; j < outer_.size() && ok; ++j) ok = coprime_to_primes(abs64(y_[outer_[j]]));
      if (ok) inner();
      std::size_t j = 1;
      while (j < outer_.size()) {
        if (advance(outer_[j])) break;
        y_[outer_[j]] = first_value(outer_[j]);
        ++j;
      }
      if (j >= outer_.size()) break;
    }
  }

 private:
  std::vector<std::int64_t> values_of(std::size_t k) const {
    std::vector<std::int64_t> out;
    const std::int64_t r = leaf_.radius[k];
    if (k != plan_.sign_k) {
      for (std::int64_t v = -r; v < 0; ++v) out.push_back(v);
    }
    for (std::int64_t v = 1; v <= r; ++v) out.push_back(v);
    return out;
  }
  std::int64_t first_value(std::size_t k) const { return k == plan_.sign_k ? 1 : -leaf_.radius[k]; }
  bool advance(std::size_t k) {
    std::int64_t& v = y_[k];
    if (v == leaf_.radius[k]) return false;
    v = v == -1 ? 1 : v + 1;
    return true;
  }
  bool coprime_to_primes(u64 v) const {
    for (const auto& c : leaf_.chosen) {
      if (v % c.first == 0) return false;
    }
    return true;
  }

  void inner() {
    const std::size_t in = leaf_.inner;
    const std::int64_t r = leaf_.radius[in];
    const bool positive = in == plan_.sign_k;
    const std::int64_t lo = positive ? 1 : -r;
    (leaf_.deflated() ? out_.phase2 : out_.phase1) += static_cast<u64>(positive ? r : 2 * r);

    u64 g = 0;
    for (auto k : outer_) g = std::gcd(g, abs64(y_[k]));

    if (plan_.scan_all) {
      for (std::int64_t y = lo; y <= r; ++y) {
        if (y == 0 || std::gcd(g, abs64(y)) != 1 || !coprime_to_primes(abs64(y))) continue;
        y_[in] = y;
        emit(false);
      }
      return;
    }

    // f restricted to the support as a polynomial in y_inner, modulo 2^61 - 1.
    std::size_t degree = 0;
    for (const auto& t : plan_.terms) degree = std::max<std::size_t>(degree, t.exps[in]);
    b_.assign(degree + 1, 0);
    xm_.resize(K_);
    for (auto k : outer_) xm_[k] = mulmod(leaf_.part_mod[k], to_mod(y_[k]));
    for (const auto& t : plan_.terms) {
      u64 v = t.coeff;
      for (auto k : outer_) {
        if (t.exps[k]) v = mulmod(v, powmod(xm_[k], t.exps[k]));
      }
      b_[t.exps[in]] = addmod(b_[t.exps[in]], v);
    }
    u64 pk = 1;
    for (std::size_t d = 0; d <= degree; ++d) {
      b_[d] = mulmod(b_[d], pk);
      pk = mulmod(pk, leaf_.part_mod[in]);
    }

    for (std::int64_t y = lo; y <= r; ++y) {
      if (y == 0) continue;
      const u64 ym = to_mod(y);
      u64 v = b_[degree];
      for (std::size_t d = degree; d-- > 0;) v = addmod(mulmod(v, ym), b_[d]);
      if (v != 0) continue;
      if (std::gcd(g, abs64(y)) != 1 || !coprime_to_primes(abs64(y))) continue;
      y_[in] = y;
      emit(true);
    }
  }

  const std::vector<Integer>& prime_part() {
    if (part_.empty()) {
      part_.assign(K_, Integer(1));
      for (const auto& [p, pi] : leaf_.chosen) {
        for (std::size_t k = 0; k < K_; ++k) {
          Integer pk;
          mpz_ui_pow_ui(pk.get_mpz_t(), p, plan_.patterns[pi].e[k]);
          part_[k] *= pk;
        }
      }
    }
    return part_;
  }

  void emit(bool check_equation) {
    const auto& part = prime_part();
    std::vector<Integer> x(ctx_.w.size(), Integer(0));
    for (std::size_t k = 0; k < K_; ++k) x[plan_.idx[k]] = part[k] * Integer(static_cast<long>(y_[k]));
    if (check_equation && ctx_.poly->eval(x) != 0) return;
    WPoint p(ctx_.w, std::move(x));
    Integer h = wh_m_power(p);
    if (check_equation) {
      // Hits are rare; re-verify the construction on each one.
      if (h > ctx_.budget || !is_canonical(p)) throw std::logic_error("search emitted a non-canonical point " + p.to_string());
    }
    out_.hits.push_back({std::move(p), std::move(h), plan_.mask});
  }

  const Context& ctx_;
  const Leaf& leaf_;
  const Plan& plan_;
  Worker& out_;
  std::size_t K_;
  std::vector<std::size_t> outer_;
  std::vector<std::int64_t> y_;
  std::vector<u64> b_, xm_;
  std::vector<Integer> part_;
};

// Points with support {a, b} on V(f) when f restricted to the line is not
// identically zero: x_a^beta / x_b^alpha is a rational root of a univariate
// polynomial.
std::vector<SearchHit> solve_line(const Context& ctx, std::uint64_t mask) {
  const auto idx = indices_of(mask, ctx.w.size());
  const std::size_t a = idx[0], b = idx[1];
  const u64 g = std::gcd(ctx.w[a], ctx.w[b]);
  const u64 alpha = ctx.w[a] / g, beta = ctx.w[b] / g;
  const auto terms = restricted_terms(*ctx.poly, mask);
  std::uint32_t i0 = terms.front()->exps[a];
  for (const Term* t : terms) i0 = std::min(i0, t->exps[a]);
  std::map<u64, Integer> coeff;  // power of rho -> coefficient
  for (const Term* t : terms) coeff[(t->exps[a] - i0) / beta] += t->coeff;
  std::erase_if(coeff, [](const auto& kv) { return kv.second == 0; });
  std::vector<SearchHit> out;
  if (coeff.size() < 2) return out;  // a monomial: no zero with x_a x_b != 0
  const u64 shift = coeff.begin()->first;
  const u64 top = coeff.rbegin()->first - shift;
  const Integer& c_low = coeff.begin()->second;
  const Integer& c_high = coeff.rbegin()->second;

  const auto divisors = [](const Integer& n) {
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : factor(n).factors) {
      const std::size_t size = ds.size();
      Integer pk = 1;
      for (unsigned k = 1; k <= e; ++k) {
        pk *= p;
        for (std::size_t j = 0; j < size; ++j) ds.push_back(ds[j] * pk);
      }
    }
    return ds;
  };
  // beta a' - alpha b' = 1
  u64 ap = 0;
  while ((beta * ap) % alpha != 1 % alpha) ++ap;
  const long bp = static_cast<long>((static_cast<std::int64_t>(beta * ap) - 1) / static_cast<std::int64_t>(alpha));

  std::set<Rational> roots;
  for (const auto& u : divisors(c_low)) {
    for (const auto& v : divisors(c_high)) {
      for (int s : {1, -1}) {
        Rational rho(u * s, v);
        rho.canonicalize();
        if (roots.count(rho)) continue;
        // sum c_k u^k v^{top-k}
        Integer acc = 0;
        const Integer num = rho.get_num(), den = rho.get_den();
        for (const auto& [k, c] : coeff) acc += c * pow(num, k - shift) * pow(den, top - (k - shift));
        if (acc == 0) roots.insert(rho);
      }
    }
  }
  for (const auto& rho : roots) {
    std::vector<Rational> coords(ctx.w.size(), Rational(0));
    coords[a] = pow_signed(rho, static_cast<long>(ap));
    coords[b] = pow_signed(rho, bp);
    WPoint p = canonicalize(integralize(coords, ctx.w).point);
    if (ctx.poly->eval(p.coords()) != 0) throw std::logic_error("line solve produced a non-root");
    Integer h = wh_m_power(p);
    if (h > ctx.budget) continue;
    if (!ctx.config.phase2 && gcd_of(std::vector<Integer>(p.coords().begin(), p.coords().end())) != 1) continue;
    out.push_back({std::move(p), std::move(h), mask});
  }
  return out;
}

void sort_hits(std::vector<SearchHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
    if (x.wh_m != y.wh_m) return x.wh_m < y.wh_m;
    return coordinate_key_less(x.point.coords(), y.point.coords());
  });
}

SearchResult run(const SearchConfig& config, const WPoly* poly) {
  const auto start = std::chrono::steady_clock::now();
  if (config.bound <= 0) throw ConfigError("bound must be positive");
  if (config.jobs == 0) throw ConfigError("jobs must be at least 1");
  if (config.w.size() > 63) throw ConfigError("too many coordinates");
  for (auto i : config.nonvanishing) {
    if (i >= config.w.size()) throw ConfigError("nonvanishing index out of range");
  }
  if (poly && !(poly->weights() == config.w)) throw ConfigError("hypersurface weights do not match the search weights");

  Context ctx{config, poly, config.w, config.w.lcm(), height_budget(config.w, config.bound)};
  SearchResult result;
  result.stats.jobs = config.jobs;
  if (ctx.budget < 1) return result;

  std::uint64_t required = 0;
  for (auto i : config.nonvanishing) required |= std::uint64_t{1} << i;
  const std::size_t n = config.w.size();

  std::vector<Worker> workers(config.jobs);
  std::vector<Leaf> batch;
  // Scans the pending leaves, split into (leaf, first outer value) items.
  const auto flush = [&] {
    std::vector<std::pair<std::size_t, std::int64_t>> items;
    for (std::size_t k = 0; k < batch.size(); ++k) {
      if (batch[k].deflated()) ++result.stats.deflation_leaves;
      for (auto v : LeafScan(ctx, batch[k], workers[0]).first_values()) items.emplace_back(k, v);
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    const auto work = [&](Worker& me) {
      try {
        for (std::size_t i = next++; i < items.size(); i = next++) LeafScan(ctx, batch[items[i].first], me).run(items[i].second);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_lock);
        if (!failure) failure = std::current_exception();
        next = items.size();
      }
    };
    if (config.jobs == 1) {
      work(workers[0]);
    } else {
      std::vector<std::thread> threads;
      for (auto& wk : workers) threads.emplace_back(work, std::ref(wk));
      for (auto& t : threads) t.join();
    }
    batch.clear();
    if (failure) std::rethrow_exception(failure);
  };
  const std::function<void(Leaf&&)> sink = [&](Leaf&& leaf) {
    batch.push_back(std::move(leaf));
    if (batch.size() >= 4096) flush();
  };

  const bool trace = std::getenv("WPROJ_SEARCH_TRACE") != nullptr;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask & required) != required) continue;
    const auto idx = indices_of(mask, n);
    const bool restricted_zero = poly && restricted_terms(*poly, mask).empty();
    if (idx.size() == 1) {
      // The single point with support {i}: [0:..:1:..:0], wh = 1.
      std::vector<Integer> x(n, Integer(0));
      x[idx[0]] = 1;
      WPoint p(config.w, std::move(x));
      if (poly) {
        ++result.stats.singleton_checks;
        if (poly->eval(p.coords()) != 0) continue;
      }
      result.points.push_back({std::move(p), Integer(1), mask});
      continue;
    }
    if (poly && !restricted_zero && idx.size() == 2 && config.line_solve) {
      ++result.stats.line_solves;
      auto hits = solve_line(ctx, mask);
      result.points.insert(result.points.end(), hits.begin(), hits.end());
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto leaves0 = result.stats.deflation_leaves;
    std::uint64_t before = 0;
    for (const auto& wk : workers) before += wk.phase1 + wk.phase2;
    const Plan plan = make_plan(ctx, mask, !poly || restricted_zero);
    build_leaves(ctx, plan, sink);
    flush();
    if (trace) {
      std::uint64_t after = 0;
      for (const auto& wk : workers) after += wk.phase1 + wk.phase2;
      std::fprintf(stderr, "support %#llx: %llu deflation leaves, %llu candidates, %.2fs\n",
                   static_cast<unsigned long long>(mask),
                   static_cast<unsigned long long>(result.stats.deflation_leaves - leaves0),
                   static_cast<unsigned long long>(after - before),
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
  }
  for (auto& wk : workers) {
    result.stats.phase1_candidates += wk.phase1;
    result.stats.phase2_candidates += wk.phase2;
    for (auto& h : wk.hits) result.points.push_back(std::move(h));
  }
  sort_hits(result.points);
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

Integer height_budget(const WeightVector& w, const Rational& B) {
  if (B <= 0) throw ConfigError("bound must be positive");
  return floor(pow(B, w.lcm()));
}

SearchResult enumerate_bounded(const SearchConfig& config) { return run(config, nullptr); }

SearchResult search_hypersurface(const SearchConfig& config) {
  if (!config.hypersurface) throw ConfigError("hypersurface search needs a polynomial");
  return run(config, &*config.hypersurface);
}

bool point_order_less(const WPoint& a, const WPoint& b) {
  const Integer ha = wh_m_power(a), hb = wh_m_power(b);
  if (ha != hb) return ha < hb;
  return coordinate_key_less(a.coords(), b.coords());
}

void sort_points(std::vector<WPoint>& points) {
  std::vector<SearchHit> hits;
  hits.reserve(points.size());
  for (auto& p : points) {
    Integer h = wh_m_power(p);
    const auto mask = support_mask(p.coords());
    hits.push_back({std::move(p), std::move(h), mask});
  }
  sort_hits(hits);
  points.clear();
  for (auto& h : hits) points.push_back(std::move(h.point));
}

}  // namespace wproj
