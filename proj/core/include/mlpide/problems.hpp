// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "mlpide/mlp.hpp"

namespace mlpide {

// Mean-reverting diffusion with uniform-cube jumps:
//   dX = alpha (mu0 1 - X) dt + sigma0 dW + compensated jumps,
// nu(dz) = lambda 1_{[0,1]^d}(z) dz, eta(s,x,z) = z on the cube.
// The nonlinearity f(t,x,v) = -beta min(v,0) prices default risk on the
// negative part of the value; g is a min-option call spread less a recovery
// offset.
struct VasicekJumpParams {
    double alpha = 0.01;
    double mu0 = 100.0;
    double sigma0 = 2.0;
    double lambda = 0.5;
    double beta = 0.03;
    double K1 = 80.0;
    double K2 = 100.0;
    double L0 = 5.0;
    std::int64_t d = 1;
    double T = 0.5;
    double x0 = 100.0;

    void validate() const;
};

// g(x) = max(min_i x_i - K1, 0) - max(min_i x_i - K2, 0) - L0.
// Piecewise linear in min_i x_i, bounded in [-L0, K2 - K1 - L0].
double payoff(const VasicekJumpParams& params, std::span<const double> x);

// Assembles the full problem: coefficients, uniform-cube measure with
// intensity lambda, f(t,x,v) = -beta min(v,0) and the payoff above.
PIDEProblem vasicek_problem(const VasicekJumpParams& params);

// Linear probe under the same dynamics: f = 0, g(x) = sum_i x_i. The
// compensated jumps are centered, so the solution is the drift ODE mean:
//   u(t,x) = sum_i (mu0 + (x_i - mu0) exp(-alpha (T - t))).
PIDEProblem linear_probe_problem(const VasicekJumpParams& params);

double linear_probe_solution(const VasicekJumpParams& params, double t, std::span<const double> x);

// Name dispatch: "vasicek-jump" or "linear-probe".
PIDEProblem make_problem(const std::string& name, const VasicekJumpParams& params);

}  // namespace mlpide
