// SPDX-License-Identifier: Apache-2.0
// Reference integrators for the rate tests. Both consume the exact substream
// layout of the production stepper (child(0) normals, child(1) jump data), so
// a reference path shares its driving randomness with the production path
// built from the same key. The compensator is the closed-form integral
// instead of a Monte Carlo average; child(2) is never touched.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "mlpide/levy.hpp"
#include "mlpide/sde.hpp"
#include "mlpide/stream.hpp"

namespace testsupport {

// Same grid and coefficient freezing as the production path, but with the
// exact compensator drift: state -= dt * comp_integral per step, where
// comp_integral[i] = integral of eta_i(.,z) over the truncation set under nu
// (state-independent eta). MSE against the production path at matched keys
// isolates the compensator Monte Carlo error.
inline mlpide::PathEndpoint replay_exact_compensator(
    double t, std::span<const double> x, double s, double T,
    const mlpide::CoefficientSet& coeffs, const mlpide::LevyMeasure& measure,
    const mlpide::EulerConfig& cfg, const mlpide::StreamKey& key,
    std::span<const double> comp_integral) {
    const std::int64_t d = static_cast<std::int64_t>(x.size());
    std::vector<double> state(x.begin(), x.end());
    std::vector<double> noise(x.size()), drift(x.size()), diffusion(x.size()), mark(x.size()),
        eta_out(x.size()), jump_sum(x.size());

    const std::int64_t N = cfg.steps;
    const double h = (T - t) / static_cast<double>(N);
    std::int64_t full =
        static_cast<std::int64_t>(std::floor(static_cast<double>(N) * ((s - t) / (T - t))));
    if (full > N) {
        full = N;
    }

    auto step = [&](double tau, double dt, const mlpide::StreamKey& sk) {
        mlpide::gauss_vector(sk.child(0), 0, d, noise.data());
        coeffs.mu(tau, state, drift);
        const double sqrt_dt = std::sqrt(dt);
        for (double& v : noise) {
            v *= sqrt_dt;
        }
        coeffs.sigma(tau, state, noise, diffusion);
        const mlpide::StreamKey jump_key = sk.child(1);
        const std::uint64_t jumps = measure.sample_jump_count(cfg.delta, dt, jump_key.child(0), 0);
        std::fill(jump_sum.begin(), jump_sum.end(), 0.0);
        for (std::uint64_t j = 1; j <= jumps; ++j) {
            measure.sample_mark_into(cfg.delta, jump_key.child(static_cast<std::int64_t>(j)), 0,
                                     mark);
            coeffs.eta(tau, state, mark, eta_out);
            for (std::int64_t i = 0; i < d; ++i) {
                jump_sum[static_cast<std::size_t>(i)] += eta_out[static_cast<std::size_t>(i)];
            }
        }
        for (std::int64_t i = 0; i < d; ++i) {
            const std::size_t u = static_cast<std::size_t>(i);
            state[u] += drift[u] * dt + diffusion[u] + jump_sum[u] - dt * comp_integral[u];
        }
    };

    for (std::int64_t k = 0; k < full; ++k) {
        step(t + static_cast<double>(k) * h, h, key.child(k));
    }
    if (full < N) {
        const double last_grid = t + static_cast<double>(full) * h;
        const double partial = s - last_grid;
        if (partial > 0.0) {
            step(last_grid, partial, key.child(full));
        }
    }
    return mlpide::PathEndpoint{s, std::move(state)};
}

// Refinement of the production path: every coarse step splits into m fine
// steps driven by the same underlying noise. The coarse Brownian increment is
// distributed over the fine grid by a Brownian bridge (auxiliary normals from
// step_key.child(3)), each coarse-window jump keeps its mark but receives a
// uniform position among the fine steps (uniforms from step_key.child(4)),
// and the compensator is exact. Coefficients refreeze at every fine step, so
// the result is the (N*m)-step scheme on the identical driving path.
inline mlpide::PathEndpoint refine_replay(double t, std::span<const double> x, double T,
                                          const mlpide::CoefficientSet& coeffs,
                                          const mlpide::LevyMeasure& measure,
                                          const mlpide::EulerConfig& cfg, std::int64_t m,
                                          const mlpide::StreamKey& key,
                                          std::span<const double> comp_integral) {
    const std::int64_t d = static_cast<std::int64_t>(x.size());
    std::vector<double> state(x.begin(), x.end());
    std::vector<double> xi(x.size()), drift(x.size()), diffusion(x.size()), dw(x.size()),
        zbar(x.size()), eta_out(x.size()), jump_acc(x.size());
    std::vector<double> zeta(static_cast<std::size_t>(m) * x.size());
    std::vector<double> marks;
    std::vector<std::int64_t> pos;

    const std::int64_t N = cfg.steps;
    const double h = (T - t) / static_cast<double>(N);
    const double hf = h / static_cast<double>(m);
    const double sqrt_h = std::sqrt(h);
    const double sqrt_hf = std::sqrt(hf);

    for (std::int64_t k = 0; k < N; ++k) {
        const mlpide::StreamKey sk = key.child(k);
        const double tau = t + static_cast<double>(k) * h;

        mlpide::gauss_vector(sk.child(0), 0, d, xi.data());
        mlpide::gauss_vector(sk.child(3), 0, m * d, zeta.data());
        std::fill(zbar.begin(), zbar.end(), 0.0);
        for (std::int64_t i = 0; i < m; ++i) {
            for (std::int64_t c = 0; c < d; ++c) {
                zbar[static_cast<std::size_t>(c)] +=
                    zeta[static_cast<std::size_t>(i * d + c)] / static_cast<double>(m);
            }
        }

        const mlpide::StreamKey jump_key = sk.child(1);
        const std::uint64_t jumps = measure.sample_jump_count(cfg.delta, h, jump_key.child(0), 0);
        marks.assign(jumps * x.size(), 0.0);
        pos.assign(jumps, 0);
        mlpide::RandomStream pos_stream(sk.child(4));
        for (std::uint64_t j = 0; j < jumps; ++j) {
            measure.sample_mark_into(
                cfg.delta, jump_key.child(static_cast<std::int64_t>(j + 1)), 0,
                std::span<double>(marks).subspan(j * x.size(), x.size()));
            std::int64_t p = static_cast<std::int64_t>(pos_stream.u01() * static_cast<double>(m));
            if (p >= m) {
                p = m - 1;
            }
            pos[j] = p;
        }

        for (std::int64_t i = 0; i < m; ++i) {
            const double tf = tau + static_cast<double>(i) * hf;
            coeffs.mu(tf, state, drift);
            for (std::int64_t c = 0; c < d; ++c) {
                const std::size_t u = static_cast<std::size_t>(c);
                dw[u] = sqrt_h * xi[u] / static_cast<double>(m) +
                        sqrt_hf * (zeta[static_cast<std::size_t>(i * d + c)] - zbar[u]);
            }
            coeffs.sigma(tf, state, dw, diffusion);
            // All coefficients, eta included, see the pre-substep state.
            std::fill(jump_acc.begin(), jump_acc.end(), 0.0);
            for (std::uint64_t j = 0; j < jumps; ++j) {
                if (pos[j] == i) {
                    coeffs.eta(tf, state,
                               std::span<const double>(marks).subspan(j * x.size(), x.size()),
                               eta_out);
                    for (std::int64_t c = 0; c < d; ++c) {
                        jump_acc[static_cast<std::size_t>(c)] +=
                            eta_out[static_cast<std::size_t>(c)];
                    }
                }
            }
            for (std::int64_t c = 0; c < d; ++c) {
                const std::size_t u = static_cast<std::size_t>(c);
                state[u] += drift[u] * hf + diffusion[u] + jump_acc[u] - hf * comp_integral[u];
            }
        }
    }
    return mlpide::PathEndpoint{T, std::move(state)};
}

}  // namespace testsupport
