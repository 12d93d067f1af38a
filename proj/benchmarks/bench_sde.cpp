// SPDX-License-Identifier: Apache-2.0
// Cost of a single explicit step and of a whole simulated path, as the
// dimension and the compensator sample count grow.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "mlpide/cost.hpp"
#include "mlpide/levy.hpp"
#include "mlpide/problems.hpp"
#include "mlpide/sde.hpp"
#include "mlpide/stream.hpp"

namespace {

struct Fixture {
  mlpide::VasicekJumpParams params;
  mlpide::PIDEProblem problem;

  explicit Fixture(int d, uint32_t mc_comp, uint32_t steps)
      : params{}, problem{} {
    params.d = d;
    problem = mlpide::vasicek_problem(params);
    cfg.steps = steps;
    cfg.mc_comp = mc_comp;
  }

  mlpide::EulerConfig cfg;
};

void BM_EulerStep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const uint32_t mc = static_cast<uint32_t>(state.range(1));
  Fixture fx(d, mc, 12);
  const mlpide::StreamKey key(11u);
  std::vector<double> x(static_cast<size_t>(d), fx.params.x0);
  mlpide::CostLedger ledger;
  int64_t k = 0;
  for (auto _ : state) {
    auto next = mlpide::euler_step(x, 0.0, 0.0, 0.5 / 12.0, fx.problem.coeffs,
                                   *fx.problem.measure, fx.cfg,
                                   key.child(k++), ledger);
    benchmark::DoNotOptimize(next.data());
  }
}
BENCHMARK(BM_EulerStep)
    ->Args({1, 200})
    ->Args({10, 200})
    ->Args({100, 200})
    ->Args({10, 1000});

void BM_SimulatePath(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Fixture fx(d, 200, static_cast<uint32_t>(state.range(1)));
  const mlpide::StreamKey key(13u);
  std::vector<double> x(static_cast<size_t>(d), fx.params.x0);
  mlpide::CostLedger ledger;
  int64_t k = 0;
  for (auto _ : state) {
    auto end = mlpide::simulate(0.0, x, fx.params.T, fx.params.T,
                                fx.problem.coeffs, *fx.problem.measure, fx.cfg,
                                key.child(k++), ledger);
    benchmark::DoNotOptimize(end.state.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          state.range(1));
}
BENCHMARK(BM_SimulatePath)->Args({1, 12})->Args({10, 12})->Args({10, 48});

}  // namespace
