#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "wproj/factor.hpp"
#include "wproj/height.hpp"
#include "wproj/poly.hpp"
#include "wproj/search.hpp"

using namespace wproj;

namespace {

std::vector<Integer> sample_integers(int bits, std::size_t count) {
  gmp_randclass r(gmp_randinit_default);
  r.seed(7);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(r.get_z_bits(bits) + 2);
  return out;
}

void BM_Factor(benchmark::State& state) {
  const auto xs = sample_integers(static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Factor)->Arg(32)->Arg(64)->Arg(96);

void BM_Lwh(benchmark::State& state) {
  const WeightVector w(std::vector<std::uint64_t>{2, 4, 6, 10});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-state.range(0), state.range(0));
  std::vector<WPoint> pts;
  while (pts.size() < 256) {
    std::vector<Integer> x{Integer(d(rng)), Integer(d(rng)), Integer(d(rng)), Integer(d(rng))};
    if (x[0] != 0 || x[1] != 0 || x[2] != 0 || x[3] != 0) pts.emplace_back(w, x);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lwh(pts[i++ % pts.size()]));
}
BENCHMARK(BM_Lwh)->Arg(1000)->Arg(1000000);

void BM_EnumerateBounded(benchmark::State& state) {
  SearchConfig c{WeightVector(std::vector<std::uint64_t>{1, 2, 3}), Rational(state.range(0), 2)};
  std::size_t n = 0;
  for (auto _ : state) n = enumerate_bounded(c).points.size();
  state.counters["points"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateBounded)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SearchL2(benchmark::State& state) {
  SearchConfig c{WeightVector(std::vector<std::uint64_t>{2, 4, 6, 10}), Rational(3, 2)};
  c.hypersurface = read_wpoly_file(std::string(WPROJ_DATA_DIR) + "/l2.wpoly").front();
  std::size_t n = 0;
  for (auto _ : state) n = search_hypersurface(c).points.size();
  state.counters["points"] = static_cast<double>(n);
}
BENCHMARK(BM_SearchL2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
