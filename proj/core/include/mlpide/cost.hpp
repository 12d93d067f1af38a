// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace mlpide {

// Evaluation counters for one estimator run. Coefficient, payoff and
// nonlinearity evaluations are counted at their call sites; scalar_rvs counts
// abstract random variables (a d-dimensional normal or mark counts as d, a
// Poisson count as 1) rather than internal proposal draws.
struct CostLedger {
    std::uint64_t g_evals = 0;
    std::uint64_t f_evals = 0;
    std::uint64_t mu_evals = 0;
    std::uint64_t sigma_evals = 0;
    std::uint64_t eta_evals = 0;
    std::uint64_t scalar_rvs = 0;

    // Coefficient evaluations plus random draws: the per-path cost aggregate
    // used by the complexity bounds below.
    std::uint64_t path_evals() const;

    // Sum of all six counters. Throws std::overflow_error on wraparound.
    std::uint64_t total() const;
};

bool operator==(const CostLedger& a, const CostLedger& b);

// Component-wise sum; the zero ledger is the identity. Throws
// std::overflow_error if any counter would wrap.
CostLedger merge(const CostLedger& a, const CostLedger& b);

// Evaluation-count recursion for the nested estimator: with bases
// c(-1) = c(0) = 0,
//   c(n) = M^n (M^M e + g) + sum_{l=0}^{n-1} M^{n-l} (M^M e + f + c(l) + c(l-1)).
// e, g, f are the per-path, per-terminal and per-nonlinearity cost units.
// Computed in double; exact while every intermediate stays below 2^53.
double recursion_cost(std::int64_t n, std::int64_t M, double e, double g, double f);

// Closed-form bound 12 (3e + g + 2f) 36^n n^(2n) dominating the cumulative
// cost sum_{k=1}^{n+1} c(k) at M = k per level k.
double closed_bound(std::int64_t n, double e, double g, double f);

}  // namespace mlpide
