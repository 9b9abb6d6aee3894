#include "wproj/weights.hpp"

#include <numeric>

#include "wproj/error.hpp"

namespace wproj {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const unsigned __int128 v = static_cast<unsigned __int128>(a / g) * b;
  if (v > UINT64_MAX) throw DomainError("lcm of weights overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

WeightVector::WeightVector(std::vector<std::uint64_t> q) : q_(std::move(q)) {
  if (q_.size() < 2) throw DomainError("a weight vector needs at least two entries");
  for (auto v : q_) {
    if (v == 0) throw DomainError("weights must be positive");
    m_ = checked_lcm(m_, v);
    d_ = std::gcd(d_, v);
  }
  well_formed_ = true;
  for (std::size_t skip = 0; skip < q_.size() && well_formed_; ++skip) {
    std::uint64_t g = 0;
    for (std::size_t j = 0; j < q_.size(); ++j) {
      if (j != skip) g = std::gcd(g, q_[j]);
    }
    well_formed_ = g == 1;
  }
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<std::uint64_t> q;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const Integer v = parse_integer(piece);
    if (v <= 0 || !v.fits_ulong_p()) throw ParseError("weights must be positive integers, got '" + std::string(piece) + "'");
    q.push_back(v.get_ui());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return WeightVector(std::move(q));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(q_[i]);
  }
  return out;
}

ReducedWeights reduce_weights(const WeightVector& w) {
  std::vector<std::uint64_t> q(w.weights().begin(), w.weights().end());
  for (auto& v : q) v /= w.gcd();
  return {WeightVector(std::move(q)), w.gcd()};
}

WellFormalization well_formalize(const WeightVector& w) {
  if (!w.reduced()) throw PreconditionError("well_formalize expects reduced weights (apply reduce_weights first)");
  std::vector<std::uint64_t> q(w.weights().begin(), w.weights().end());
  std::vector<WellFormStep> steps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::uint64_t g = 0;
      for (std::size_t j = 0; j < q.size(); ++j) {
        if (j != i) g = std::gcd(g, q[j]);
      }
      if (g > 1 && std::gcd(g, q[i]) == 1) {
        for (std::size_t j = 0; j < q.size(); ++j) {
          if (j != i) q[j] /= g;
        }
        steps.push_back({i, g});
        changed = true;
        break;
      }
    }
  }
  return {WeightVector(std::move(q)), std::move(steps)};
}

std::vector<Integer> WellFormalization::transform(std::span<const Integer> coords) const {
  std::vector<Integer> out(coords.begin(), coords.end());
  if (out.size() != weights.size()) throw DomainError("point has the wrong number of coordinates");
  for (const auto& step : steps) out[step.index] = pow(out[step.index], step.divisor);
  return out;
}

std::uint64_t support_gcd(const WeightVector& w, std::span<const Integer> coords) {
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) g = std::gcd(g, w[i]);
  }
  return g;
}

bool is_singular(const WeightVector& w, std::span<const Integer> coords) {
  if (!w.well_formed()) throw PreconditionError("is_singular requires well-formed weights");
  if (coords.size() != w.size()) throw DomainError("point has the wrong number of coordinates");
  // Some prime divides every weight on the support iff their gcd exceeds 1.
  const std::uint64_t g = support_gcd(w, coords);
  if (g == 0) throw DomainError("all-zero point");
  return g > 1;
}

}  // namespace wproj
