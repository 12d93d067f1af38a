// SPDX-License-Identifier: Apache-2.0
#include "mlpide/sde.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace mlpide {

namespace {

struct StepWorkspace {
    explicit StepWorkspace(std::size_t d)
        : noise(d), drift(d), diffusion(d), mark(d), eta_out(d), jump_sum(d), comp_sum(d) {}

    std::vector<double> noise;
    std::vector<double> drift;
    std::vector<double> diffusion;
    std::vector<double> mark;
    std::vector<double> eta_out;
    std::vector<double> jump_sum;
    std::vector<double> comp_sum;
};

void check_finite(std::span<const double> state, double at_time) {
    for (double v : state) {
        if (!std::isfinite(v)) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "euler step produced non-finite state at t=%.6g",
                          at_time);
            throw numerical_error(buf);
        }
    }
}

// In-place step core; `mass` is nu(A_delta), precomputed by the caller.
void step_core(std::vector<double>& state, double eval_time, double dt,
               const CoefficientSet& coeffs, const LevyMeasure& measure, const EulerConfig& cfg,
               double mass, const StreamKey& step_key, CostLedger& ledger, StepWorkspace& ws) {
    const std::int64_t d = static_cast<std::int64_t>(state.size());
    const std::span<const double> x(state);

    gauss_vector(step_key.child(0), 0, d, ws.noise.data());
    ledger.scalar_rvs += static_cast<std::uint64_t>(d);
    coeffs.mu(eval_time, x, ws.drift);
    ledger.mu_evals += 1;
    const double sqrt_dt = std::sqrt(dt);
    for (std::int64_t i = 0; i < d; ++i) {
        ws.noise[static_cast<std::size_t>(i)] *= sqrt_dt;
    }
    coeffs.sigma(eval_time, x, ws.noise, ws.diffusion);
    ledger.sigma_evals += 1;

    const StreamKey jump_key = step_key.child(1);
    const std::uint64_t jumps = measure.sample_jump_count(cfg.delta, dt, jump_key.child(0), 0);
    ledger.scalar_rvs += 1;
    std::fill(ws.jump_sum.begin(), ws.jump_sum.end(), 0.0);
    for (std::uint64_t j = 1; j <= jumps; ++j) {
        measure.sample_mark_into(cfg.delta, jump_key.child(static_cast<std::int64_t>(j)), 0,
                                 ws.mark);
        ledger.scalar_rvs += static_cast<std::uint64_t>(d);
        coeffs.eta(eval_time, x, ws.mark, ws.eta_out);
        ledger.eta_evals += 1;
        for (std::int64_t i = 0; i < d; ++i) {
            ws.jump_sum[static_cast<std::size_t>(i)] += ws.eta_out[static_cast<std::size_t>(i)];
        }
    }

    const StreamKey comp_key = step_key.child(2);
    std::fill(ws.comp_sum.begin(), ws.comp_sum.end(), 0.0);
    for (std::int64_t j = 1; j <= cfg.mc_comp; ++j) {
        measure.sample_mark_into(cfg.delta, comp_key.child(j), 0, ws.mark);
        ledger.scalar_rvs += static_cast<std::uint64_t>(d);
        coeffs.eta(eval_time, x, ws.mark, ws.eta_out);
        ledger.eta_evals += 1;
        for (std::int64_t i = 0; i < d; ++i) {
            ws.comp_sum[static_cast<std::size_t>(i)] += ws.eta_out[static_cast<std::size_t>(i)];
        }
    }

    const double comp_scale = dt * mass / static_cast<double>(cfg.mc_comp);
    for (std::int64_t i = 0; i < d; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        state[k] += ws.drift[k] * dt + ws.diffusion[k] + ws.jump_sum[k] - comp_scale * ws.comp_sum[k];
    }
    check_finite(state, eval_time);
}

}  // namespace

double grid_time(double t, double T, std::int64_t N, double s) {
    if (N < 1) {
        throw std::domain_error("grid_time: N must be positive");
    }
    if (!(T > t)) {
        throw std::domain_error("grid_time: horizon must satisfy T > t");
    }
    if (s < t || s > T) {
        throw std::domain_error("grid_time: s must lie in [t,T]");
    }
    const double h = (T - t) / static_cast<double>(N);
    // Ratio first: (s-t)/(T-t) is exactly 1 at s = T, so T maps to itself.
    const std::int64_t k =
        static_cast<std::int64_t>(std::floor(static_cast<double>(N) * ((s - t) / (T - t))));
    return t + static_cast<double>(k) * h;
}

std::vector<double> euler_step(std::span<const double> state, double step_start, double eval_time,
                               double dt, const CoefficientSet& coeffs, const LevyMeasure& measure,
                               const EulerConfig& cfg, const StreamKey& key, CostLedger& ledger) {
    cfg.validate();
    if (!(dt > 0.0)) {
        throw std::domain_error("euler_step: dt must be positive");
    }
    if (!std::isfinite(step_start) || !std::isfinite(eval_time)) {
        throw std::domain_error("euler_step: times must be finite");
    }
    check_finite(state, eval_time);
    std::vector<double> next(state.begin(), state.end());
    StepWorkspace ws(next.size());
    const double mass = measure.mass_above(cfg.delta);
    step_core(next, eval_time, dt, coeffs, measure, cfg, mass, key, ledger, ws);
    return next;
}

PathEndpoint simulate(double t, std::span<const double> x, double s, double T,
                      const CoefficientSet& coeffs, const LevyMeasure& measure,
                      const EulerConfig& cfg, const StreamKey& key, CostLedger& ledger) {
    cfg.validate();
    if (!(T > t)) {
        throw std::domain_error("simulate: horizon must satisfy T > t");
    }
    if (s < t || s > T) {
        throw std::domain_error("simulate: target time must lie in [t,T]");
    }
    PathEndpoint end;
    end.time = t;
    end.state.assign(x.begin(), x.end());
    if (s == t) {
        return end;
    }

    const std::int64_t N = cfg.steps;
    const double h = (T - t) / static_cast<double>(N);
    std::int64_t full =
        static_cast<std::int64_t>(std::floor(static_cast<double>(N) * ((s - t) / (T - t))));
    if (full > N) {
        full = N;
    }

    StepWorkspace ws(end.state.size());
    const double mass = measure.mass_above(cfg.delta);
    for (std::int64_t k = 0; k < full; ++k) {
        const double tau = t + static_cast<double>(k) * h;
        step_core(end.state, tau, h, coeffs, measure, cfg, mass, key.child(k), ledger, ws);
    }
    if (full < N) {
        const double last_grid = t + static_cast<double>(full) * h;
        const double partial = s - last_grid;
        if (partial > 0.0) {
            step_core(end.state, last_grid, partial, coeffs, measure, cfg, mass, key.child(full),
                      ledger, ws);
        }
    }
    end.time = s;
    return end;
}

}  // namespace mlpide
