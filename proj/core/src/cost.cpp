// SPDX-License-Identifier: Apache-2.0
#include "mlpide/cost.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace mlpide {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw std::overflow_error("CostLedger: counter overflow");
    }
    return a + b;
}

// Integer power by repeated multiplication; exact in double for the small
// bases and exponents the bounds are evaluated at.
double ipow(double base, std::int64_t k) {
    double r = 1.0;
    for (std::int64_t i = 0; i < k; ++i) {
        r *= base;
    }
    return r;
}

}  // namespace

std::uint64_t CostLedger::path_evals() const {
    return checked_add(checked_add(mu_evals, sigma_evals), checked_add(eta_evals, scalar_rvs));
}

std::uint64_t CostLedger::total() const {
    return checked_add(path_evals(), checked_add(g_evals, f_evals));
}

bool operator==(const CostLedger& a, const CostLedger& b) {
    return a.g_evals == b.g_evals && a.f_evals == b.f_evals && a.mu_evals == b.mu_evals &&
           a.sigma_evals == b.sigma_evals && a.eta_evals == b.eta_evals &&
           a.scalar_rvs == b.scalar_rvs;
}

CostLedger merge(const CostLedger& a, const CostLedger& b) {
    CostLedger out;
    out.g_evals = checked_add(a.g_evals, b.g_evals);
    out.f_evals = checked_add(a.f_evals, b.f_evals);
    out.mu_evals = checked_add(a.mu_evals, b.mu_evals);
    out.sigma_evals = checked_add(a.sigma_evals, b.sigma_evals);
    out.eta_evals = checked_add(a.eta_evals, b.eta_evals);
    out.scalar_rvs = checked_add(a.scalar_rvs, b.scalar_rvs);
    return out;
}

double recursion_cost(std::int64_t n, std::int64_t M, double e, double g, double f) {
    if (n < -1) {
        throw std::domain_error("recursion_cost: n must be >= -1");
    }
    if (M < 1) {
        throw std::domain_error("recursion_cost: M must be positive");
    }
    if (e < 0.0 || g < 0.0 || f < 0.0) {
        throw std::domain_error("recursion_cost: cost units must be nonnegative");
    }
    if (n <= 0) {
        return 0.0;
    }
    const double mM = ipow(static_cast<double>(M), M);
    // c[k+1] holds c(k) so that c(-1) sits at index 0.
    std::vector<double> c(static_cast<std::size_t>(n) + 2, 0.0);
    for (std::int64_t m = 1; m <= n; ++m) {
        double v = ipow(static_cast<double>(M), m) * (mM * e + g);
        for (std::int64_t l = 0; l < m; ++l) {
            v += ipow(static_cast<double>(M), m - l) *
                 (mM * e + f + c[static_cast<std::size_t>(l) + 1] + c[static_cast<std::size_t>(l)]);
        }
        c[static_cast<std::size_t>(m) + 1] = v;
    }
    return c[static_cast<std::size_t>(n) + 1];
}

double closed_bound(std::int64_t n, double e, double g, double f) {
    if (n < 1) {
        throw std::domain_error("closed_bound: n must be positive");
    }
    if (e < 0.0 || g < 0.0 || f < 0.0) {
        throw std::domain_error("closed_bound: cost units must be nonnegative");
    }
    return 12.0 * (3.0 * e + g + 2.0 * f) * ipow(36.0, n) * ipow(static_cast<double>(n), 2 * n);
}

}  // namespace mlpide
