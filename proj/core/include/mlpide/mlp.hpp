// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>

#include "mlpide/cost.hpp"
#include "mlpide/levy.hpp"
#include "mlpide/sde.hpp"
#include "mlpide/stream.hpp"

namespace mlpide {

// Recursion parameters: Picard level n and Monte Carlo base M. M^n samples
// feed the terminal sum, so M^n is capped to keep counters and slot arrays
// sane.
struct MLPConfig {
    std::int64_t n = 1;
    std::int64_t M = 1;
    EulerConfig euler;

    void validate() const;
};

// Regularity/assumption constants carried as metadata: L (Lipschitz bound of
// the nonlinearity), p (dimension growth exponent), q (small-jump exponent),
// K (jump-moment constant). Used for advisory checks only.
struct AssumptionConstants {
    double L = 0.0;
    double p = 0.0;
    double q = 0.0;
    double K = 0.0;
};

// The full semilinear problem: terminal-value PIDE data (coefficients, jump
// measure, nonlinearity f, terminal condition g) over horizon [0,T] in
// dimension d.
struct PIDEProblem {
    CoefficientSet coeffs;
    std::shared_ptr<const LevyMeasure> measure;
    std::function<double(double t, std::span<const double> x, double v)> f;
    std::function<double(std::span<const double> x)> g;
    std::int64_t d = 1;
    double T = 1.0;
    AssumptionConstants constants;
};

// Per-experiment aggregate across runs.
struct RunStats {
    double avg_sol = 0.0;
    double std_dev = 0.0;
    double avg_time_s = 0.0;
    double avg_evals = 0.0;
};

// t + (T - t) U with U uniform on [0,1) from the stream.
double sample_eval_time(double t, double T, const StreamKey& key, std::uint64_t counter);

// Nested multilevel Picard estimate of the solution at (t,x):
//   n = 0: 0.
//   n >= 1: (1/M^n) sum_i g(Y_T) over M^n independent terminal paths, plus
//   sum_{l=0}^{n-1} (T-t)/M^{n-l} sum_i [ f(R, Y_R, U_l) - 1{l>=1} f(R, Y_R, U_{l-1}) ],
// where each sample draws its own evaluation time R uniform on [t,T] and its
// own path Y to R; the two nonlinearity evaluations at a sample share that
// (R, Y_R) but use independent recursive estimators.
//
// Key layout: terminal sample i uses key.child(0).child(-(i+1)); level-l
// sample i uses pos = key.child(l).child(i+1) with R from pos.child(1), the
// path from pos.child(2) and the level-l recursion from pos.child(3); the
// level-(l-1) recursion of the same sample uses key.child(-l).child(i+1).
// All children are disjoint, so every estimator in the tree is independent.
//
// threads > 1 parallelizes the top-level sample loops; nested recursion stays
// sequential. Results are byte-identical for every thread count.
double mlp_estimate(const PIDEProblem& problem, double t, std::span<const double> x,
                    const MLPConfig& cfg, const StreamKey& key, CostLedger& ledger,
                    int threads = 1);

// `runs` independent estimates from root keys StreamKey(seed).child(r).
// Returns the sample mean, unbiased standard deviation (0 when runs = 1),
// mean wall time per run and mean ledger total per run.
RunStats run_experiment(const PIDEProblem& problem, const MLPConfig& cfg, double t,
                        std::span<const double> x, std::int64_t runs, std::uint64_t seed,
                        int threads = 1);

}  // namespace mlpide
