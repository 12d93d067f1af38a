// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mlpide/cost.hpp"
#include "mlpide/levy.hpp"
#include "mlpide/stream.hpp"

namespace mlpide {

class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Drift, diffusion and jump-amplitude coefficients. sigma is exposed as an
// action out = sigma(t,x) w so structured forms (scalar times identity) stay
// O(d). All three are pure; evaluation counting happens at the call sites.
struct CoefficientSet {
    using DriftFn = std::function<void(double t, std::span<const double> x, std::span<double> out)>;
    using SigmaApplyFn = std::function<void(double t, std::span<const double> x,
                                            std::span<const double> w, std::span<double> out)>;
    using JumpFn = std::function<void(double t, std::span<const double> x,
                                      std::span<const double> z, std::span<double> out)>;

    DriftFn mu;
    SigmaApplyFn sigma;
    JumpFn eta;

    // Declared regularity metadata (Lipschitz constant, growth exponent);
    // recorded, never verified at runtime.
    double lipschitz_L = 0.0;
    double growth_p = 0.0;
};

// Discretization parameters: time steps N, jump truncation level delta, and
// Monte Carlo sample count for the compensator integral per step. The
// resolution condition mc_comp >= delta^-2 K d^p is advisory; the experiment
// layer warns when a configuration violates it (the constants K, p live with
// the problem, not here).
struct EulerConfig {
    std::int64_t steps = 12;
    double delta = 0.1;
    std::int64_t mc_comp = 200;

    void validate() const {
        if (steps < 1) {
            throw std::domain_error("EulerConfig: steps must be positive");
        }
        if (!(delta > 0.0 && delta < 1.0)) {
            throw std::domain_error("EulerConfig: delta must lie in (0,1)");
        }
        if (mc_comp < 1) {
            throw std::domain_error("EulerConfig: mc_comp must be positive");
        }
    }

    bool meets_compensator_resolution(double K, double p, std::int64_t d) const {
        const double bound = K * std::pow(static_cast<double>(d), p) / (delta * delta);
        return static_cast<double>(mc_comp) >= bound;
    }
};

struct PathEndpoint {
    double time = 0.0;
    std::vector<double> state;
};

// Left grid point of s on the N-step grid over [t,T]:
//   t + floor(N (s-t)/(T-t)) (T-t)/N.
double grid_time(double t, double T, std::int64_t N, double s);

// One Euler update over a window of length dt with coefficients frozen at
// eval_time:
//   x + mu dt + sigma sqrt(dt) W + sum_{j<=P} eta(Z_j)
//     - (dt nu(A_delta)/mc_comp) sum_{j<=mc_comp} eta(V_j),
// P ~ Poisson(nu(A_delta) dt), Z_j and V_j i.i.d. from the normalized
// restriction of nu. Coefficients see the pre-step state only.
//
// Substream layout (replayed verbatim by the test oracles; do not reorder):
//   key.child(0)                  d-dimensional normal, counters 0..d-1
//   key.child(1).child(0)         Poisson jump count
//   key.child(1).child(j)         jump mark j = 1..P
//   key.child(2).child(j)         compensator mark j = 1..mc_comp
// The compensator branch is disjoint from the others, so Brownian and jump
// randomness is unchanged when only mc_comp varies.
std::vector<double> euler_step(std::span<const double> state, double step_start, double eval_time,
                               double dt, const CoefficientSet& coeffs, const LevyMeasure& measure,
                               const EulerConfig& cfg, const StreamKey& key, CostLedger& ledger);

// Euler path from (t,x) to time s on the N-step grid over [t,T]: full steps
// of length (T-t)/N with coefficients at the left grid point, then one
// partial step of length s - grid_time(t,T,N,s) when s is off-grid, with
// coefficients frozen at the last full grid time. Step k draws from
// key.child(k) using the euler_step layout. Fresh Poisson counts, marks and
// compensator samples every step.
PathEndpoint simulate(double t, std::span<const double> x, double s, double T,
                      const CoefficientSet& coeffs, const LevyMeasure& measure,
                      const EulerConfig& cfg, const StreamKey& key, CostLedger& ledger);

}  // namespace mlpide
