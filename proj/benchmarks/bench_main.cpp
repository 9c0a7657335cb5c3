#include <benchmark/benchmark.h>

#include "zetagap/gap_stats.hpp"
#include "zetagap/gue.hpp"
#include "zetagap/zero_finder.hpp"
#include "zetagap/zeta_eval.hpp"

namespace {

using namespace zetagap;

void BM_HardyZ_RiemannSiegel(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta::hardy_Z(t, {1e-8, zeta::Method::riemann_siegel}));
  }
}
BENCHMARK(BM_HardyZ_RiemannSiegel)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_HardyZ_EulerMaclaurin(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta::hardy_Z(t, {1e-8, zeta::Method::euler_maclaurin}));
  }
}
BENCHMARK(BM_HardyZ_EulerMaclaurin)->Arg(100)->Arg(1000)->Arg(10000);

void BM_FredholmE(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gue::fredholm_E(2.5, order));
}
BENCHMARK(BM_FredholmE)->Arg(20)->Arg(40)->Arg(80);

void BM_ScanZeros(benchmark::State& state) {
  const double lo = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeros::scan_zeros(lo, lo + 100.0));
}
BENCHMARK(BM_ScanZeros)->Arg(1000)->Arg(9000)->Unit(benchmark::kMillisecond);

void BM_ComputeZeros(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeros::compute_zeros(10.0, 1010.0));
}
BENCHMARK(BM_ComputeZeros)->Unit(benchmark::kMillisecond);

void BM_MomentSum(benchmark::State& state) {
  static const ZeroTable table = [] {
    auto t = zeros::compute_zeros(10.0, 2010.0);
    zeros::turing_certify(t, 2000.0);
    return t;
  }();
  const auto seq = gaps::gaps(table, 2000.0);
  for (auto _ : state) benchmark::DoNotOptimize(gaps::power_sum(seq, 2.0));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(seq.size()));
}
BENCHMARK(BM_MomentSum);

}  // namespace

BENCHMARK_MAIN();
