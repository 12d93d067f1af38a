// SPDX-License-Identifier: Apache-2.0
#include "mlpide/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace mlpide {

namespace {

double min_component(std::span<const double> x) {
    double m = std::numeric_limits<double>::infinity();
    for (double v : x) {
        m = std::min(m, v);
    }
    return m;
}

CoefficientSet vasicek_coefficients(const VasicekJumpParams& p) {
    CoefficientSet c;
    const double alpha = p.alpha;
    const double mu0 = p.mu0;
    const double sigma0 = p.sigma0;
    c.mu = [alpha, mu0](double, std::span<const double> x, std::span<double> out) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            out[i] = alpha * (mu0 - x[i]);
        }
    };
    c.sigma = [sigma0](double, std::span<const double>, std::span<const double> w,
                       std::span<double> out) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            out[i] = sigma0 * w[i];
        }
    };
    // eta(s,x,z) = z restricted to the unit cube; marks off the cube map to 0.
    c.eta = [](double, std::span<const double>, std::span<const double> z, std::span<double> out) {
        bool inside = true;
        for (double v : z) {
            if (v < 0.0 || v > 1.0) {
                inside = false;
                break;
            }
        }
        for (std::size_t i = 0; i < z.size(); ++i) {
            out[i] = inside ? z[i] : 0.0;
        }
    };
    c.lipschitz_L = alpha;
    c.growth_p = 0.0;
    return c;
}

AssumptionConstants vasicek_constants(const VasicekJumpParams& p) {
    AssumptionConstants k;
    k.L = p.beta;     // Lipschitz constant of v -> -beta min(v,0)
    k.p = 0.0;        // jump moments are dimension-free for the unit cube
    k.q = 2.0;        // small-jump moment of the cube scales as delta^2
    k.K = p.lambda;   // int (1 ^ |z|^2) nu(dz) <= nu(R^d) = lambda
    return k;
}

}  // namespace

void VasicekJumpParams::validate() const {
    if (!(alpha > 0.0) || !(sigma0 > 0.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("VasicekJumpParams: alpha, sigma0, lambda must be positive");
    }
    if (!(K1 < K2)) {
        throw std::invalid_argument("VasicekJumpParams: requires K1 < K2");
    }
    if (d < 1) {
        throw std::invalid_argument("VasicekJumpParams: dimension must be positive");
    }
    if (!(T > 0.0)) {
        throw std::invalid_argument("VasicekJumpParams: horizon must be positive");
    }
    if (!std::isfinite(mu0) || !std::isfinite(beta) || !std::isfinite(L0) || !std::isfinite(x0)) {
        throw std::invalid_argument("VasicekJumpParams: parameters must be finite");
    }
}

double payoff(const VasicekJumpParams& params, std::span<const double> x) {
    if (static_cast<std::int64_t>(x.size()) != params.d) {
        throw std::invalid_argument("payoff: state dimension mismatch");
    }
    const double m = min_component(x);
    return std::max(m - params.K1, 0.0) - std::max(m - params.K2, 0.0) - params.L0;
}

PIDEProblem vasicek_problem(const VasicekJumpParams& params) {
    params.validate();
    PIDEProblem prob;
    prob.coeffs = vasicek_coefficients(params);
    prob.measure = std::make_shared<UniformCubeMeasure>(params.d, params.lambda);
    const double beta = params.beta;
    prob.f = [beta](double, std::span<const double>, double v) {
        return -beta * std::min(v, 0.0);
    };
    prob.g = [params](std::span<const double> x) { return payoff(params, x); };
    prob.d = params.d;
    prob.T = params.T;
    prob.constants = vasicek_constants(params);
    return prob;
}

PIDEProblem linear_probe_problem(const VasicekJumpParams& params) {
    params.validate();
    PIDEProblem prob;
    prob.coeffs = vasicek_coefficients(params);
    prob.measure = std::make_shared<UniformCubeMeasure>(params.d, params.lambda);
    prob.f = [](double, std::span<const double>, double) { return 0.0; };
    prob.g = [](std::span<const double> x) {
        double s = 0.0;
        for (double v : x) {
            s += v;
        }
        return s;
    };
    prob.d = params.d;
    prob.T = params.T;
    prob.constants = vasicek_constants(params);
    return prob;
}

double linear_probe_solution(const VasicekJumpParams& params, double t, std::span<const double> x) {
    if (static_cast<std::int64_t>(x.size()) != params.d) {
        throw std::invalid_argument("linear_probe_solution: state dimension mismatch");
    }
    const double decay = std::exp(-params.alpha * (params.T - t));
    double s = 0.0;
    for (double v : x) {
        s += params.mu0 + (v - params.mu0) * decay;
    }
    return s;
}

PIDEProblem make_problem(const std::string& name, const VasicekJumpParams& params) {
    if (name == "vasicek-jump") {
        return vasicek_problem(params);
    }
    if (name == "linear-probe") {
        return linear_probe_problem(params);
    }
    throw std::invalid_argument("make_problem: unknown problem '" + name +
                                "' (expected vasicek-jump or linear-probe)");
}

}  // namespace mlpide
