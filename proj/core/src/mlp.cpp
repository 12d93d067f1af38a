// SPDX-License-Identifier: Apache-2.0
#include "mlpide/mlp.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mlpide/compensated.hpp"
#include "mlpide/parallel.hpp"

namespace mlpide {

namespace {

constexpr std::int64_t kMaxSamples = std::int64_t{1} << 31;

// M^k with an overflow guard against the sample cap.
std::int64_t checked_pow(std::int64_t M, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (r > kMaxSamples / M) {
            throw std::domain_error("MLPConfig: M^n exceeds the sample cap 2^31");
        }
        r *= M;
    }
    return r;
}

double estimate(const PIDEProblem& problem, double t, std::span<const double> x, std::int64_t n,
                std::int64_t M, const EulerConfig& euler, const StreamKey& key, CostLedger& ledger,
                int threads) {
    if (n <= 0) {
        return 0.0;
    }
    const double T = problem.T;
    const int workers = threads > 1 ? threads : 1;
    std::vector<CostLedger> worker_ledgers(static_cast<std::size_t>(workers));
    std::vector<double> slots;

    // Terminal sum: (1/M^n) sum_i g(Y_T^{(i)}), one fresh path per sample.
    const std::int64_t mn = checked_pow(M, n);
    slots.assign(static_cast<std::size_t>(mn), 0.0);
    {
        const StreamKey terminal_key = key.child(0);
        parallel_for(mn, workers, [&](std::int64_t lo, std::int64_t hi, int w) {
            CostLedger& lg = worker_ledgers[static_cast<std::size_t>(w)];
            for (std::int64_t i = lo; i < hi; ++i) {
                const StreamKey path_key = terminal_key.child(-(i + 1));
                const PathEndpoint yT =
                    simulate(t, x, T, T, problem.coeffs, *problem.measure, euler, path_key, lg);
                slots[static_cast<std::size_t>(i)] = problem.g(yT.state);
                lg.g_evals += 1;
            }
        });
    }
    KahanSum terminal;
    for (double v : slots) {
        terminal.add(v);
    }
    KahanSum result;
    result.add(terminal.value() / static_cast<double>(mn));

    // Level-difference sums. Sample i at level l draws R and Y_R once and
    // feeds the same pair to both nonlinearity evaluations.
    for (std::int64_t l = 0; l < n; ++l) {
        const std::int64_t count = checked_pow(M, n - l);
        slots.assign(static_cast<std::size_t>(count), 0.0);
        const StreamKey level_key = key.child(l);
        const StreamKey prev_key = key.child(-l);  // only consumed when l >= 1
        parallel_for(count, workers, [&](std::int64_t lo, std::int64_t hi, int w) {
            CostLedger& lg = worker_ledgers[static_cast<std::size_t>(w)];
            for (std::int64_t i = lo; i < hi; ++i) {
                const StreamKey pos = level_key.child(i + 1);
                const double R = sample_eval_time(t, T, pos.child(1), 0);
                lg.scalar_rvs += 1;
                const PathEndpoint yR =
                    simulate(t, x, R, T, problem.coeffs, *problem.measure, euler, pos.child(2), lg);
                const double u_cur =
                    estimate(problem, R, yR.state, l, M, euler, pos.child(3), lg, 1);
                double contrib = problem.f(R, yR.state, u_cur);
                lg.f_evals += 1;
                if (l >= 1) {
                    const double u_prev = estimate(problem, R, yR.state, l - 1, M, euler,
                                                   prev_key.child(i + 1), lg, 1);
                    contrib -= problem.f(R, yR.state, u_prev);
                    lg.f_evals += 1;
                }
                slots[static_cast<std::size_t>(i)] = contrib;
            }
        });
        KahanSum level_sum;
        for (double v : slots) {
            level_sum.add(v);
        }
        result.add((T - t) / static_cast<double>(count) * level_sum.value());
    }

    for (const CostLedger& lg : worker_ledgers) {
        ledger = merge(ledger, lg);
    }
    return result.value();
}

}  // namespace

void MLPConfig::validate() const {
    if (n < 0) {
        throw std::domain_error("MLPConfig: n must be nonnegative");
    }
    if (M < 1) {
        throw std::domain_error("MLPConfig: M must be positive");
    }
    checked_pow(M, n);
    euler.validate();
}

double sample_eval_time(double t, double T, const StreamKey& key, std::uint64_t counter) {
    if (!(T >= t)) {
        throw std::domain_error("sample_eval_time: requires t <= T");
    }
    return t + (T - t) * uniform01(key, counter);
}

double mlp_estimate(const PIDEProblem& problem, double t, std::span<const double> x,
                    const MLPConfig& cfg, const StreamKey& key, CostLedger& ledger, int threads) {
    cfg.validate();
    if (!(t >= 0.0 && t <= problem.T)) {
        throw std::domain_error("mlp_estimate: t must lie in [0,T]");
    }
    if (static_cast<std::int64_t>(x.size()) != problem.d) {
        throw std::invalid_argument("mlp_estimate: state dimension mismatch");
    }
    if (cfg.n == 0) {
        return 0.0;
    }
    return estimate(problem, t, x, cfg.n, cfg.M, cfg.euler, key, ledger, threads);
}

RunStats run_experiment(const PIDEProblem& problem, const MLPConfig& cfg, double t,
                        std::span<const double> x, std::int64_t runs, std::uint64_t seed,
                        int threads) {
    if (runs < 1) {
        throw std::domain_error("run_experiment: runs must be positive");
    }
    const StreamKey root(seed);
    std::vector<double> values(static_cast<std::size_t>(runs));
    std::vector<double> totals(static_cast<std::size_t>(runs));
    std::vector<double> seconds(static_cast<std::size_t>(runs));
    for (std::int64_t r = 0; r < runs; ++r) {
        CostLedger lg;
        const auto t0 = std::chrono::steady_clock::now();
        values[static_cast<std::size_t>(r)] =
            mlp_estimate(problem, t, x, cfg, root.child(r), lg, threads);
        const auto t1 = std::chrono::steady_clock::now();
        seconds[static_cast<std::size_t>(r)] = std::chrono::duration<double>(t1 - t0).count();
        totals[static_cast<std::size_t>(r)] = static_cast<double>(lg.total());
    }

    KahanSum sum;
    for (double v : values) {
        sum.add(v);
    }
    RunStats stats;
    stats.avg_sol = sum.value() / static_cast<double>(runs);
    if (runs > 1) {
        KahanSum sq;
        for (double v : values) {
            const double dv = v - stats.avg_sol;
            sq.add(dv * dv);
        }
        stats.std_dev = std::sqrt(sq.value() / static_cast<double>(runs - 1));
    }
    KahanSum time_sum;
    for (double v : seconds) {
        time_sum.add(v);
    }
    stats.avg_time_s = time_sum.value() / static_cast<double>(runs);
    KahanSum eval_sum;
    for (double v : totals) {
        eval_sum.add(v);
    }
    stats.avg_evals = eval_sum.value() / static_cast<double>(runs);
    return stats;
}

}  // namespace mlpide
