// SPDX-License-Identifier: Apache-2.0
// Deterministic stand-ins for hand-traced step tests: a jump measure whose
// marks are scripted by child index, and trivial coefficient sets.
#pragma once

#include <span>
#include <vector>

#include "mlpide/levy.hpp"
#include "mlpide/sde.hpp"

namespace testsupport {

// d = 1 measure with fixed tail mass and marks read from a script: the mark
// drawn under key.child(j) is script[j - 1]. Jump counts are always zero, so
// only the compensator loop consumes marks.
class ScriptedMeasure final : public mlpide::LevyMeasure {
public:
    ScriptedMeasure(double mass, std::vector<double> script)
        : LevyMeasure(1, "scripted"), mass_(mass), script_(std::move(script)) {}

    double mass_above(double) const override { return mass_; }

    void sample_mark_into(double, const mlpide::StreamKey& key, std::uint64_t,
                          std::span<double> out) const override {
        const std::int64_t j = key.path().back();
        out[0] = script_.at(static_cast<std::size_t>(j - 1));
    }

    std::uint64_t sample_jump_count(double, double, const mlpide::StreamKey&,
                                    std::uint64_t) const override {
        return 0;
    }

private:
    double mass_;
    std::vector<double> script_;
};

// mu = sigma = 0, eta(z) = z: the state moves only through jump terms.
inline mlpide::CoefficientSet jump_only_coefficients() {
    mlpide::CoefficientSet c;
    c.mu = [](double, std::span<const double>, std::span<double> out) {
        for (double& v : out) v = 0.0;
    };
    c.sigma = [](double, std::span<const double>, std::span<const double>, std::span<double> out) {
        for (double& v : out) v = 0.0;
    };
    c.eta = [](double, std::span<const double>, std::span<const double> z, std::span<double> out) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = z[i];
    };
    return c;
}

// mu = c (constant vector), sigma = 0, eta = 0: pure deterministic drift.
inline mlpide::CoefficientSet constant_drift_coefficients(double drift) {
    mlpide::CoefficientSet c;
    c.mu = [drift](double, std::span<const double>, std::span<double> out) {
        for (double& v : out) v = drift;
    };
    c.sigma = [](double, std::span<const double>, std::span<const double>, std::span<double> out) {
        for (double& v : out) v = 0.0;
    };
    c.eta = [](double, std::span<const double>, std::span<const double>, std::span<double> out) {
        for (double& v : out) v = 0.0;
    };
    return c;
}

// Everything zero: the state never moves.
inline mlpide::CoefficientSet zero_coefficients() { return constant_drift_coefficients(0.0); }

// Mean reversion toward mu0 with scalar diffusion and identity jumps; the
// same shape as the shipped model but assembled directly so tests can pair
// it with any measure (including zero intensity).
inline mlpide::CoefficientSet diffusive_coefficients(double alpha, double mu0, double sigma0) {
    mlpide::CoefficientSet c;
    c.mu = [alpha, mu0](double, std::span<const double> x, std::span<double> out) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * (mu0 - x[i]);
    };
    c.sigma = [sigma0](double, std::span<const double>, std::span<const double> w,
                       std::span<double> out) {
        for (std::size_t i = 0; i < w.size(); ++i) out[i] = sigma0 * w[i];
    };
    c.eta = [](double, std::span<const double>, std::span<const double> z, std::span<double> out) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = z[i];
    };
    c.lipschitz_L = alpha;
    return c;
}

}  // namespace testsupport
