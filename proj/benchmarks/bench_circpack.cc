#include <benchmark/benchmark.h>

#include <random>

#include "circpack/aptas.h"
#include "circpack/nfdh.h"
#include "circpack/oracle.h"
#include "circpack/verify.h"

using namespace circpack;

namespace {

Instance random_instance(std::uint64_t seed, int n, long min_den) {
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.w = 1;
  inst.h = 1;
  for (int i = 0; i < n; ++i) {
    const long q = 2 + static_cast<long>(rng() % 126);
    const long lo = (q + min_den - 1) / min_den;
    const long hi = q / 2;
    Rational r(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)), q);
    r.canonicalize();
    inst.circles.push_back({i, r});
  }
  return inst;
}

void BM_OracleFourQuarters(benchmark::State& state) {
  for (auto _ : state) {
    auto v = check_configuration({Rational(1, 4)}, {{4}}, 1, 1, Rational(1, 256), BackendOptions{});
    benchmark::DoNotOptimize(v.kind);
  }
}
BENCHMARK(BM_OracleFourQuarters)->Unit(benchmark::kMillisecond);

void BM_PackBins(benchmark::State& state) {
  const Instance inst = random_instance(1, static_cast<int>(state.range(0)), 64);
  for (auto _ : state) {
    auto res = pack_bins(inst, 3, Rational(1, 10), AptasOptions{});
    benchmark::DoNotOptimize(res.packing.bins.size());
  }
}
BENCHMARK(BM_PackBins)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_PackStrip(benchmark::State& state) {
  const Instance inst = random_instance(2, static_cast<int>(state.range(0)), 64);
  for (auto _ : state) {
    auto res = pack_strip(inst.circles, 1, 3, Rational(1, 10), AptasOptions{});
    benchmark::DoNotOptimize(res.height);
  }
}
BENCHMARK(BM_PackStrip)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Nfdh(benchmark::State& state) {
  const Instance inst = random_instance(3, static_cast<int>(state.range(0)), 128);
  for (auto _ : state) {
    auto res = nfdh_pack_circles(inst.circles, 1, 1);
    benchmark::DoNotOptimize(res.bins.size());
  }
}
BENCHMARK(BM_Nfdh)->Arg(100)->Arg(1000);

void BM_Verify(benchmark::State& state) {
  const Instance inst = random_instance(4, static_cast<int>(state.range(0)), 128);
  const auto nf = nfdh_pack_circles(inst.circles, 1, 1);
  const Packing pk{nf.bins, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(verify_packing(inst, pk).valid);
}
BENCHMARK(BM_Verify)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
