// SPDX-License-Identifier: Apache-2.0
// Throughput of the counter-based generator and the derived samplers.

#include <benchmark/benchmark.h>

#include <vector>

#include "mlpide/stream.hpp"

namespace {

void BM_PhiloxBlock(benchmark::State& state) {
  mlpide::PhiloxBlock ctr{{1u, 2u, 3u, 4u}};
  for (auto _ : state) {
    ctr = mlpide::philox4x32_10(5u, 6u, ctr.x[0], ctr.x[1], ctr.x[2], ctr.x[3]);
    benchmark::DoNotOptimize(ctr);
  }
  // Each block is 16 bytes of output.
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * 16);
}
BENCHMARK(BM_PhiloxBlock);

void BM_Uniform01(benchmark::State& state) {
  const mlpide::StreamKey key(42u);
  uint64_t ctr = 0;
  double acc = 0.0;
  for (auto _ : state) {
    acc += mlpide::uniform01(key, ctr++);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Uniform01);

void BM_Gauss(benchmark::State& state) {
  const mlpide::StreamKey key(42u);
  uint64_t ctr = 0;
  double acc = 0.0;
  for (auto _ : state) {
    acc += mlpide::gauss(key, ctr++);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Gauss);

void BM_GaussVector(benchmark::State& state) {
  const mlpide::StreamKey key(42u);
  const int64_t d = state.range(0);
  std::vector<double> out(static_cast<size_t>(d));
  uint64_t ctr = 0;
  for (auto _ : state) {
    mlpide::gauss_vector(key, ctr, d, out.data());
    ctr += static_cast<uint64_t>(d);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_GaussVector)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

void BM_ChildDerivation(benchmark::State& state) {
  const mlpide::StreamKey root(7u);
  int64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(root.child(i++));
  }
}
BENCHMARK(BM_ChildDerivation);

}  // namespace

BENCHMARK_MAIN();
