#include <map>
#include <numeric>
#include <set>

#include "wproj/error.hpp"
#include "wproj/factor.hpp"
#include "wproj/height.hpp"
#include "wproj/search.hpp"

namespace wproj {

namespace {

struct CoordLess {
  bool operator()(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
    return coordinate_key_less(a, b);
  }
};

std::vector<WPoint> collect(const WeightVector& w, const std::set<std::vector<Integer>, CoordLess>& found) {
  std::vector<WPoint> out;
  for (const auto& c : found) out.emplace_back(w, c);
  sort_points(out);
  return out;
}

// Calls visit on every tuple of the box [-r_i, r_i].
template <class Visit>
void for_box(std::span<const std::int64_t> radii, Visit visit) {
  std::vector<std::int64_t> y(radii.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = -radii[i];
  while (true) {
    visit(y);
    std::size_t i = 0;
    while (i < y.size() && y[i] == radii[i]) {
      y[i] = -radii[i];
      ++i;
    }
    if (i == y.size()) return;
    ++y[i];
  }
}

}  // namespace

std::vector<WPoint> brute_force_oracle(const WeightVector& w, const Rational& B, std::span<const std::int64_t> radii) {
  if (radii.size() != w.size()) throw ConfigError("one radius per coordinate expected");
  const Integer budget = height_budget(w, B);
  std::set<std::vector<Integer>, CoordLess> found;
  for_box(radii, [&](const std::vector<std::int64_t>& y) {
    std::vector<Integer> x;
    bool zero = true;
    for (auto v : y) {
      x.emplace_back(static_cast<long>(v));
      zero = zero && v == 0;
    }
    if (zero) return;
    WPoint p(w, std::move(x));
    if (wh_m_power(p) > budget) return;
    const WPoint c = canonicalize(p);
    found.insert(std::vector<Integer>(c.coords().begin(), c.coords().end()));
  });
  return collect(w, found);
}

std::vector<WPoint> veronese_oracle(const WeightVector& w, const Rational& B) {
  const Integer budget = height_budget(w, B);
  std::set<std::vector<Integer>, CoordLess> found;
  if (budget < 1) return {};
  if (!budget.fits_slong_p()) throw ConfigError("Veronese oracle bound too large");
  const std::uint64_t m = w.lcm();
  const std::vector<std::int64_t> radii(w.size(), budget.get_si());
  for_box(radii, [&](const std::vector<std::int64_t>& y) {
    // Primitive representative with first nonzero entry positive.
    std::vector<Integer> v;
    for (auto t : y) v.emplace_back(static_cast<long>(t));
    const Integer g = gcd_of(v);
    if (g != 1) return;
    for (const auto& t : v) {
      if (t != 0) {
        if (t < 0) return;
        break;
      }
    }
    // Find |mu| with |mu y_i| a (m/q_i)-th power on the support.
    std::map<Integer, std::uint64_t> primes;
    for (const auto& t : v) {
      if (t != 0 && abs(t) != 1) {
        for (const auto& [p, e] : factor(t).factors) primes[p] = 0;
      }
    }
    std::uint64_t period = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) period = std::lcm(period, m / w[i]);
    }
    Integer mu = 1;
    for (auto& [p, t] : primes) {
      bool solved = false;
      for (std::uint64_t cand = 0; cand < period && !solved; ++cand) {
        solved = true;
        for (std::size_t i = 0; i < v.size() && solved; ++i) {
          if (v[i] == 0) continue;
          solved = (cand + static_cast<std::uint64_t>(valuation(v[i], p))) % (m / w[i]) == 0;
        }
        if (solved) t = cand;
      }
      if (!solved) return;
      mu *= pow(p, t);
    }
    Integer h = 0;
    for (const auto& t : v) h = std::max<Integer>(h, abs(t));
    // phi_m forgets signs of coordinates with even m/q_i, so every sign
    // choice compatible with the sign of mu is a preimage.
    for (int mu_sign : {1, -1}) {
      std::vector<Integer> base(v.size());
      std::vector<std::size_t> free;
      bool ok = true;
      for (std::size_t i = 0; i < v.size() && ok; ++i) {
        if (v[i] == 0) continue;
        const Integer target = mu * mu_sign * v[i];
        const std::uint64_t k = m / w[i];
        const Integer root = iroot_floor(abs(target), k);
        if (pow(root, k) != abs(target)) throw std::logic_error("Veronese lift is not exact");
        if (k % 2 == 0) {
          ok = target > 0;
          free.push_back(i);
        }
        base[i] = target < 0 ? Integer(-root) : root;
      }
      if (!ok) continue;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << free.size()); ++s) {
        std::vector<Integer> x = base;
        for (std::size_t j = 0; j < free.size(); ++j) {
          if (s >> j & 1) x[free[j]] = -x[free[j]];
        }
        const WPoint c = canonicalize(WPoint(w, std::move(x)));
        if (wh_m_power(c) != h) throw std::logic_error("Veronese lift changed the height");
        found.insert(std::vector<Integer>(c.coords().begin(), c.coords().end()));
      }
    }
  });
  return collect(w, found);
}

}  // namespace wproj
