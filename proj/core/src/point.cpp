#include "wproj/point.hpp"

#include <algorithm>
#include <limits>

#include "wproj/error.hpp"
#include "wproj/factor.hpp"

namespace wproj {

namespace {

void check_shape(const WeightVector& w, std::span<const Integer> coords) {
  if (coords.size() != w.size()) {
    throw DomainError("point has " + std::to_string(coords.size()) + " coordinates, weights expect " +
                      std::to_string(w.size()));
  }
}

bool all_zero(std::span<const Integer> coords) {
  return std::all_of(coords.begin(), coords.end(), [](const Integer& v) { return v == 0; });
}

template <class T, class Parse>
std::vector<T> split_colon(std::string_view text, Parse parse) {
  std::vector<T> out;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    out.push_back(parse(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return out;
}

// Index whose sign is fixed by the canonical choice: the last support index
// with q_i / d_J odd. Such an index exists because gcd(q_i / d_J) = 1.
std::size_t sign_index(const WeightVector& w, std::span<const Integer> coords, std::uint64_t dj) {
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] != 0 && (w[i] / dj) % 2 == 1) return i;
  }
  return coords.size();
}

}  // namespace

WPoint::WPoint(WeightVector w, std::vector<Integer> coords) : w_(std::move(w)), coords_(std::move(coords)) {
  check_shape(w_, coords_);
  if (all_zero(coords_)) throw DomainError("all-zero point");
  wgcd_ = wproj::wgcd(w_, coords_);
}

std::string WPoint::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ':';
    out += coords_[i].get_str();
  }
  return out;
}

std::vector<Rational> parse_rational_tuple(std::string_view text) {
  return split_colon<Rational>(text, [](std::string_view s) { return parse_rational(s); });
}

std::vector<Integer> parse_integer_tuple(std::string_view text) {
  return split_colon<Integer>(text, [](std::string_view s) { return parse_integer(s); });
}

Integer wgcd(const WeightVector& w, std::span<const Integer> coords) {
  check_shape(w, coords);
  const Integer g = gcd_of(std::vector<Integer>(coords.begin(), coords.end()));
  if (g == 0) throw DomainError("all-zero point");
  Integer out = 1;
  if (g == 1) return out;
  for (const auto& [p, e] : factor(g).factors) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0) continue;
      best = std::min<std::int64_t>(best, valuation(coords[i], p) / static_cast<std::int64_t>(w[i]));
    }
    if (best > 0) out *= pow(p, static_cast<unsigned long>(best));
  }
  return out;
}

Integralized integralize(std::span<const Rational> coords, const WeightVector& w) {
  if (coords.size() != w.size()) throw DomainError("point has the wrong number of coordinates");
  if (std::all_of(coords.begin(), coords.end(), [](const Rational& v) { return v == 0; }))
    throw DomainError("all-zero point");
  // ord_p(lambda) = max_i ceil(ord_p(den x_i) / q_i) over primes in denominators.
  Integer den_lcm = 1;
  for (const auto& c : coords) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer lambda = 1;
  if (den_lcm != 1) {
    for (const auto& [p, e] : factor(den_lcm).factors) {
      std::int64_t need = 0;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        const std::int64_t v = valuation(Integer(coords[i].get_den()), p);
        const std::int64_t q = static_cast<std::int64_t>(w[i]);
        need = std::max(need, (v + q - 1) / q);
      }
      lambda *= pow(p, static_cast<unsigned long>(need));
    }
  }
  std::vector<Integer> out;
  out.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Rational scaled = coords[i] * Rational(pow(lambda, w[i]));
    scaled.canonicalize();
    out.emplace_back(scaled.get_num());
  }
  return {WPoint(w, std::move(out)), lambda};
}

WPoint normalize(const WPoint& x) {
  if (x.wgcd() == 1) return x;
  std::vector<Integer> out(x.coords().begin(), x.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] /= pow(x.wgcd(), x.weights()[i]);
  return WPoint(x.weights(), std::move(out));
}

WPoint canonicalize(const WPoint& x) {
  const WeightVector& w = x.weights();
  std::vector<Integer> out(x.coords().begin(), x.coords().end());
  const std::uint64_t dj = support_gcd(w, out);
  const Integer g = gcd_of(out);
  if (g != 1) {
    for (const auto& [p, e] : factor(g).factors) {
      // k = floor(d_J * min_i ord_p(x_i) / q_i) computed exactly as a rational floor.
      Rational best = -1;
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] == 0) continue;
        Rational r(valuation(out[i], p), static_cast<unsigned long>(w[i]));
        r.canonicalize();
        if (best < 0 || r < best) best = r;
      }
      const Integer k = floor(best * Rational(static_cast<unsigned long>(dj)));
      if (k == 0) continue;
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] != 0) out[i] /= pow(p, (w[i] / dj) * k.get_ui());
      }
    }
  }
  const std::size_t s = sign_index(w, out, dj);
  if (out[s] < 0) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] != 0 && (w[i] / dj) % 2 == 1) out[i] = -out[i];
    }
  }
  return WPoint(w, std::move(out));
}

bool is_canonical(const WPoint& x) { return canonicalize(x) == x; }

bool equals(const WPoint& x, const WPoint& y) {
  if (!(x.weights() == y.weights())) throw DomainError("points live in different weighted spaces");
  return canonicalize(x) == canonicalize(y);
}

WPoint act(const Rational& lambda, const WPoint& x) {
  if (lambda == 0) throw DomainError("scaling by zero");
  std::vector<Integer> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational v = pow(lambda, x.weights()[i]) * Rational(x[i]);
    v.canonicalize();
    if (v.get_den() != 1) throw DomainError("act: lambda^q_i * x_i is not an integer (integralize first)");
    out.emplace_back(v.get_num());
  }
  return WPoint(x.weights(), std::move(out));
}

std::vector<Integer> veronese(const WPoint& x) {
  const WeightVector& w = x.weights();
  std::vector<Integer> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(pow(x[i], w.lcm() / w[i]));
  const Integer g = gcd_of(out);
  Integer sign = 1;
  for (const auto& v : out) {
    if (v != 0) {
      sign = v < 0 ? -1 : 1;
      break;
    }
  }
  for (auto& v : out) v = v / g * sign;
  return out;
}

bool coordinate_key_less(std::span<const Integer> a, std::span<const Integer> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = mpz_cmpabs(a[i].get_mpz_t(), b[i].get_mpz_t());
    if (c != 0) return c < 0;
    const bool na = a[i] < 0, nb = b[i] < 0;
    if (na != nb) return !na;
  }
  return a.size() < b.size();
}

std::uint64_t support_mask(std::span<const Integer> coords) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace wproj
