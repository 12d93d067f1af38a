// SPDX-License-Identifier: Apache-2.0
// End-to-end estimator cost for small level counts; the work grows roughly
// like the recursion-cost model, so these runs double as a sanity check on
// the accounting.

#include <benchmark/benchmark.h>

#include <vector>

#include "mlpide/cost.hpp"
#include "mlpide/mlp.hpp"
#include "mlpide/problems.hpp"
#include "mlpide/stream.hpp"

namespace {

void BM_MLPEstimate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  mlpide::VasicekJumpParams params;
  const auto problem = mlpide::vasicek_problem(params);
  mlpide::MLPConfig cfg;
  cfg.n = n;
  cfg.M = n;
  cfg.euler.steps = 12;
  cfg.euler.mc_comp = 200;
  const std::vector<double> x(1, params.x0);
  const mlpide::StreamKey key(17u);
  int64_t r = 0;
  for (auto _ : state) {
    mlpide::CostLedger ledger;
    const double u = mlpide::mlp_estimate(problem, 0.0, x, cfg,
                                          key.child(r++), ledger, threads);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_MLPEstimate)
    ->Args({1, 1})
    ->Args({2, 1})
    ->Args({3, 1})
    ->Args({3, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace
