#include "wproj/vojta.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <tuple>

#include "wproj/error.hpp"
#include "wproj/height.hpp"
#include "wproj/point.hpp"
#include "wproj/valuation.hpp"

namespace wproj {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Small deterministic stream; the exact sequence is part of the report contract.
class Stream {
 public:
  explicit Stream(std::uint64_t state) : state_(state) {}
  std::uint64_t next() { return splitmix64(state_++); }
  // Uniform in [-r, r] by rejection.
  std::int64_t uniform(std::int64_t r) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(r) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return static_cast<std::int64_t>(v % span) - r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace

FormalLog margin(const FormalLog& lhs, const FormalLog& height_term, const FormalLog& sunit_term, unsigned r,
                 const Rational& eps, const Rational& delta) {
  Rational denom = Rational(static_cast<unsigned long>(r) - 1) + delta;
  return height_term * eps + sunit_term * (Rational(1) / denom) - lhs;
}

void validate(const ScanConfig& config) {
  if (config.spec.asserted_codim() < 2) throw ConfigError("vojta scan needs an asserted codimension r >= 2");
  if (config.eps_grid.empty() || config.delta_grid.empty()) throw ConfigError("epsilon and delta grids must be nonempty");
  for (const auto& v : config.eps_grid) {
    if (v <= 0) throw ConfigError("epsilon values must be positive");
  }
  for (const auto& v : config.delta_grid) {
    if (v <= 0) throw ConfigError("delta values must be positive");
  }
  if (config.box.size() != config.spec.weights().size())
    throw ConfigError("box needs one radius per coordinate (" + std::to_string(config.spec.weights().size()) + ")");
  for (auto r : config.box) {
    if (r < 1) throw ConfigError("box radii must be at least 1");
  }
  if (config.jobs == 0) throw ConfigError("jobs must be at least 1");
  for (const auto& p : config.S) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw ConfigError("S must consist of primes");
  }
}

ScanRecord evaluate_record(const ScanConfig& config, std::vector<Integer> alpha) {
  const WeightVector& w = config.spec.weights();
  ScanRecord rec;
  rec.alpha = std::move(alpha);
  const WPoint x(w, rec.alpha);
  rec.height_term = local_height(x, Place::infinite());
  const auto values = config.spec.values(rec.alpha);
  const Integer g = gcd_of(values);
  if (g == 0) {
    rec.on_Z = true;
    return rec;
  }
  rec.lhs = FormalLog::log_abs(Rational(g));
  rec.boundary = std::any_of(rec.alpha.begin(), rec.alpha.end(), [](const Integer& a) { return a == 0; });
  if (rec.boundary) return rec;
  Integer prod = 1;
  for (const auto& a : rec.alpha) prod *= a;
  rec.sunit_term = FormalLog::log_abs(Rational(prime_to_S(abs(prod), config.S))) *
                   Rational(1, static_cast<unsigned long>(w.lcm()));
  for (const auto& eps : config.eps_grid) {
    for (const auto& delta : config.delta_grid) {
      rec.margins.push_back(margin(rec.lhs, rec.height_term, *rec.sunit_term, config.spec.asserted_codim(), eps, delta));
    }
  }
  return rec;
}

ScanReport scan(const ScanConfig& config) {
  validate(config);
  const WeightVector& w = config.spec.weights();
  ScanReport report{config, {}, {}, 0, 0, 0};
  report.records.resize(config.samples);
  std::vector<std::uint64_t> rejected(config.samples, 0);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  const auto work = [&] {
    try {
      for (std::uint64_t i = next++; i < config.samples; i = next++) {
        Stream rng(splitmix64(config.seed ^ splitmix64(i)));
        while (true) {
          std::vector<Integer> alpha;
          for (auto r : config.box) alpha.emplace_back(static_cast<long>(rng.uniform(r)));
          const bool zero = std::all_of(alpha.begin(), alpha.end(), [](const Integer& a) { return a == 0; });
          if (!zero && wgcd(w, alpha) == 1 && (!config.require_unit_content || gcd_of(alpha) == 1)) {
            report.records[i] = evaluate_record(config, std::move(alpha));
            break;
          }
          ++rejected[i];
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_lock);
      if (!failure) failure = std::current_exception();
      next = config.samples;
    }
  };
  if (config.jobs == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < config.jobs; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& eps : config.eps_grid) {
    for (const auto& delta : config.delta_grid) report.cells.push_back({eps, delta, 0, 0, FormalLog()});
  }
  for (std::uint64_t i = 0; i < config.samples; ++i) {
    report.rejected_samples += rejected[i];
    const ScanRecord& rec = report.records[i];
    if (rec.on_Z) ++report.on_Z_records;
    if (rec.boundary) ++report.boundary_records;
    for (std::size_t c = 0; c < rec.margins.size(); ++c) {
      ScanCell& cell = report.cells[c];
      ++cell.evaluated;
      if (rec.margins[c].sign() < 0) {
        ++cell.violations;
        cell.empirical_C = flog_max(cell.empirical_C, -rec.margins[c]);
      }
    }
  }
  return report;
}

std::vector<DeltaEstimate> estimate_delta(const ScanReport& report, const Rational& allowed_violation_fraction) {
  const auto& cfg = report.config;
  if (cfg.eps_grid.empty() || cfg.delta_grid.empty()) throw ConfigError("empty grid");
  // Candidate deltas in increasing order.
  std::vector<std::size_t> order(cfg.delta_grid.size());
  for (std::size_t d = 0; d < order.size(); ++d) order[d] = d;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cfg.delta_grid[a] < cfg.delta_grid[b]; });
  std::vector<DeltaEstimate> out;
  for (std::size_t e = 0; e < cfg.eps_grid.size(); ++e) {
    DeltaEstimate est{cfg.eps_grid[e], std::nullopt, 0, {}};
    for (std::size_t d : order) {
      const ScanCell& cell = report.cell(e, d);
      Rational frac = cell.evaluated ? Rational(Integer(cell.violations), Integer(cell.evaluated)) : Rational(0);
      frac.canonicalize();
      est.violation_fraction = frac;
      est.violating.clear();
      const std::size_t c = e * cfg.delta_grid.size() + d;
      for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& rec = report.records[i];
        if (rec.has_margins() && rec.margins[c].sign() < 0) est.violating.push_back(i);
      }
      if (frac <= allowed_violation_fraction) {
        est.delta = cfg.delta_grid[d];
        break;
      }
    }
    out.push_back(std::move(est));
  }
  return out;
}

std::vector<ExceptionalCandidate> exceptional_candidates(const ScanReport& report) {
  std::vector<ExceptionalCandidate> out;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const ScanRecord& rec = report.records[i];
    if (!rec.has_margins()) continue;
    if (!std::all_of(rec.margins.begin(), rec.margins.end(), [](const FormalLog& m) { return m.sign() < 0; })) continue;
    ExceptionalCandidate cand;
    cand.record = i;
    const auto& a = rec.alpha;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) cand.zero_coords.push_back(j);
      for (std::size_t k = j + 1; k < a.size(); ++k) {
        if (a[j] == a[k]) cand.equal_coords.emplace_back(j, k);
        Integer g;
        mpz_gcd(g.get_mpz_t(), a[j].get_mpz_t(), a[k].get_mpz_t());
        if (g > 1) cand.pair_gcds.emplace_back(j, k, g);
      }
    }
    cand.gcd = gcd_of(a);
    const ScanRecord again = evaluate_record(report.config, a);
    cand.verified = again.margins == rec.margins &&
                    std::all_of(again.margins.begin(), again.margins.end(), [](const FormalLog& m) { return m.sign() < 0; });
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace wproj
