// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlpide/mlp.hpp"
#include "mlpide/problems.hpp"

namespace mlpide {

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Experiment grid: one problem evaluated over dimensions x (n,M) levels,
// `runs` independent repetitions per cell. Defaults mirror the shipped
// model's reference setup (T = 1/2, N = 12, mc_comp = 200, delta = 0.1,
// x = 100 broadcast, 10 runs, levels n = M in 1..5).
struct ExperimentConfig {
    std::string problem = "vasicek-jump";
    VasicekJumpParams params;
    double t = 0.0;
    std::vector<double> x;  // explicit initial state; empty broadcasts params.x0
    std::vector<std::int64_t> dims = {1};
    std::vector<std::pair<std::int64_t, std::int64_t>> levels = {{1, 1}, {2, 2}, {3, 3},
                                                                 {4, 4}, {5, 5}};
    EulerConfig euler;
    std::int64_t runs = 10;
    std::uint64_t seed = 1;
    int threads = 1;
    // When false the avg_time_s column is zeroed so output is byte-stable
    // across machines and thread counts.
    bool timing = true;
    std::string out = "-";
    std::string format = "csv";

    void validate() const;
};

struct GridCell {
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::int64_t M = 0;
    RunStats stats;
};

// key = value per line; '#' starts a comment. Keys mirror the CLI flags
// (problem, dim, levels, runs, seed, steps, delta, mc_comp, threads, out,
// format) plus t, x0, x, timing and the model parameters (alpha, mu0,
// sigma0, lambda, beta, K1, K2, L0, T).
ExperimentConfig parse_config_text(std::istream& in);
ExperimentConfig load_config_file(const std::string& path);

// "1,2,3" (n = M) or "n:M" tokens, comma separated.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_levels(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

// Executes every (d, level) cell. Deterministic for a fixed seed and
// independent of the thread count. Emits an advisory warning to `warnings`
// (when non-null) for cells whose mc_comp falls below delta^-2 K d^p.
std::vector<GridCell> run_grid(const ExperimentConfig& cfg, std::ostream* warnings = nullptr);

// CSV schema: d,n,M,N,delta,mc_comp,runs,avg_sol,std_dev,avg_time_s,avg_evals
// with floats at 17 significant digits (lossless round-trip).
void write_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<GridCell>& cells);
void write_json(std::ostream& os, const ExperimentConfig& cfg, const std::vector<GridCell>& cells);

// Dispatches on cfg.format and cfg.out ("-" means stdout).
void write_output(const ExperimentConfig& cfg, const std::vector<GridCell>& cells);

}  // namespace mlpide
