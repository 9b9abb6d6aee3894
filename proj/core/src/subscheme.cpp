#include "wproj/subscheme.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "wproj/error.hpp"
#include "wproj/factor.hpp"
#include "wproj/height.hpp"

namespace wproj {

SubschemeSpec::SubschemeSpec(std::vector<WPoly> polys, unsigned asserted_codim)
    : polys_(std::move(polys)), codim_(asserted_codim) {
  if (polys_.empty()) throw ParseError("subscheme needs at least one polynomial");
  if (codim_ == 0) throw ParseError("asserted codimension must be positive");
  for (const auto& f : polys_) {
    if (!(f.vars() == polys_.front().vars())) throw ParseError("subscheme polynomials use different variables");
  }
}

std::vector<Integer> SubschemeSpec::values(std::span<const Integer> alpha) const {
  std::vector<Integer> out;
  out.reserve(polys_.size());
  for (const auto& f : polys_) out.push_back(f.eval(alpha));
  return out;
}

bool SubschemeSpec::contains(const WPoint& x) const {
  const auto v = values(x.coords());
  return std::all_of(v.begin(), v.end(), [](const Integer& t) { return t == 0; });
}

namespace {

void check_space(const SubschemeSpec& Y, const WPoint& x) {
  if (!(Y.weights() == x.weights())) throw DomainError("point and subscheme live in different weighted spaces");
}

}  // namespace

Extended<FormalLog> local_height_Y(const SubschemeSpec& Y, const WPoint& x, const Place& v) {
  check_space(Y, x);
  const auto values = Y.values(x.coords());
  std::optional<FormalLog> best;
  if (v.is_finite()) {
    const Integer& p = v.prime();
    std::optional<Rational> c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      Rational r(valuation(x[i], p), static_cast<unsigned long>(x.weights()[i]));
      r.canonicalize();
      if (!c || r < *c) c = r;
    }
    std::optional<Rational> low;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[j] == 0) continue;
      const Rational e =
          Rational(valuation(values[j], p)) - Rational(static_cast<unsigned long>(Y.polys()[j].degree())) * *c;
      if (!low || e < *low) low = e;
    }
    if (!low) return Extended<FormalLog>::infinity();
    return FormalLog::log_prime(p, *low);
  }
  const FormalLog top = local_height(x, Place::infinite());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == 0) continue;
    FormalLog e = top * Rational(static_cast<unsigned long>(Y.polys()[j].degree())) - FormalLog::log_abs(Rational(values[j]));
    if (!best || flog_compare(e, *best) == std::strong_ordering::less) best = std::move(e);
  }
  if (!best) return Extended<FormalLog>::infinity();
  return *best;
}

FormalLog finite_height_Y(const SubschemeSpec& Y, const WPoint& x) {
  check_space(Y, x);
  const auto values = Y.values(x.coords());
  if (std::all_of(values.begin(), values.end(), [](const Integer& t) { return t == 0; }))
    throw InfiniteHeightError("point lies on the subscheme");
  // Only primes dividing every nonzero value or every nonzero coordinate
  // can contribute.
  std::set<Integer> primes;
  for (const Integer& g : {gcd_of(values), gcd_of(std::vector<Integer>(x.coords().begin(), x.coords().end()))}) {
    if (g > 1) {
      for (const auto& [p, e] : factor(g).factors) primes.insert(p);
    }
  }
  FormalLog total;
  for (const auto& p : primes) total += local_height_Y(Y, x, Place::finite(p)).value();
  return total;
}

FormalLog global_height_Y(const SubschemeSpec& Y, const WPoint& x) {
  FormalLog total = finite_height_Y(Y, x);
  total += local_height_Y(Y, x, Place::infinite()).value();
  return total;
}

GcdY log_gcd_Y(const SubschemeSpec& Y, std::span<const Integer> alpha, bool require_unit_content) {
  const std::vector<Integer> coords(alpha.begin(), alpha.end());
  const Integer content = gcd_of(coords);
  if (content == 0) throw DomainError("all-zero point");
  if (require_unit_content && content != 1)
    throw DomainError("gcd of the coordinates is " + content.get_str() + ", expected 1");
  const auto values = Y.values(alpha);
  const Integer g = gcd_of(values);
  if (g == 0) throw DomainError("every polynomial vanishes at the point");
  GcdY out;
  out.log_gcd = FormalLog::log_abs(Rational(g));
  out.residual = out.log_gcd - finite_height_Y(Y, WPoint(Y.weights(), coords));
  out.exact = content == 1;
  return out;
}

}  // namespace wproj
