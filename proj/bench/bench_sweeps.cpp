// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "wavefront/finite_field.hpp"
#include "wavefront/vanishing.hpp"

namespace {

using namespace wavefront;

EnumerationLimits bench_limits() {
  EnumerationLimits lim;
  lim.max_n = 9;
  return lim;
}

void BM_WeylSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lambda = Partition::rectangle(1, n);
  const auto mu = Partition::rectangle(1, n);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_check_serial(lambda, mu, bench_limits()));
}

void BM_WeylParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lambda = Partition::rectangle(1, n);
  const auto mu = Partition::rectangle(1, n);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_check(lambda, mu, bench_limits()));
}

void BM_GroupEnumeration(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(ff::GeneralLinearGroup(4, 2, parallel).order());
}

void BM_FiniteOracle(benchmark::State& state) {
  FiniteOracleOptions opts;
  opts.parallel = state.range(0) != 0;
  const auto lambda = Partition::parse("2+1+1");
  const auto mu = Partition::parse("2+2");
  for (auto _ : state) benchmark::DoNotOptimize(finite_oracle(4, 2, lambda, mu, opts));
}

}  // namespace

BENCHMARK(BM_WeylSerial)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeylParallel)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroupEnumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FiniteOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
