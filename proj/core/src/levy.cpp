// SPDX-License-Identifier: Apache-2.0
#include "mlpide/levy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mlpide {

namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::domain_error("truncation level delta must lie in (0,1)");
    }
}

std::uint64_t poisson_inversion(double mean, RandomStream& rs) {
    double p = std::exp(-mean);
    double s = p;
    const double u = rs.u01();
    std::uint64_t k = 0;
    while (u > s) {
        ++k;
        p *= mean / static_cast<double>(k);
        s += p;
        if (p <= 1e-300) {
            break;  // cumulative mass exhausted in double precision
        }
    }
    return k;
}

// Hormann's transformed-rejection sampler; valid for mean >= 10.
std::uint64_t poisson_ptrd(double mean, RandomStream& rs) {
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double U = rs.u01() - 0.5;
        const double V = rs.u01();
        const double us = 0.5 - std::abs(U);
        const double kf = std::floor((2.0 * a / us + b) * U + mean + 0.43);
        if (us >= 0.07 && V <= vr) {
            return static_cast<std::uint64_t>(kf);
        }
        if (kf < 0.0 || (us < 0.013 && V > us)) {
            continue;
        }
        const double lhs = std::log(V) + std::log(invalpha) - std::log(a / (us * us) + b);
        const double rhs = -mean + kf * loglam - std::lgamma(kf + 1.0);
        if (lhs <= rhs) {
            return static_cast<std::uint64_t>(kf);
        }
    }
}

}  // namespace

LevyMeasure::LevyMeasure(std::int64_t d, std::string family)
    : d_(d), family_(std::move(family)) {
    if (d < 1) {
        throw std::invalid_argument("LevyMeasure: dimension must be positive");
    }
}

std::uint64_t LevyMeasure::sample_jump_count(double delta, double dt, const StreamKey& key,
                                             std::uint64_t counter) const {
    if (dt < 0.0) {
        throw std::domain_error("sample_jump_count: dt must be nonnegative");
    }
    const double mean = mass_above(delta) * dt;
    if (mean == 0.0) {
        return 0;
    }
    RandomStream rs(key, counter);
    return sample_poisson(mean, rs);
}

UniformCubeMeasure::UniformCubeMeasure(std::int64_t d, double lambda)
    : LevyMeasure(d, "uniform-cube"), lambda_(lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("UniformCubeMeasure: intensity must be finite and >= 0");
    }
}

double UniformCubeMeasure::ball_mass(double delta) const {
    // Ball-cube intersection is the positive orthant of the delta ball:
    // volume V_d delta^d / 2^d = exp(d log(delta sqrt(pi)/2) - lgamma(d/2+1)).
    const double d = static_cast<double>(d_);
    const double frac =
        std::exp(d * std::log(delta * std::sqrt(std::numbers::pi) / 2.0) - std::lgamma(d / 2.0 + 1.0));
    return lambda_ * frac;
}

double UniformCubeMeasure::mass_above(double delta) const {
    check_delta(delta);
    return lambda_ - ball_mass(delta);
}

void UniformCubeMeasure::sample_mark_into(double delta, const StreamKey& key,
                                          std::uint64_t counter, std::span<double> out) const {
    check_delta(delta);
    if (static_cast<std::int64_t>(out.size()) != d_) {
        throw std::invalid_argument("sample_mark_into: output span size mismatch");
    }
    const double d2 = delta * delta;
    RandomStream rs(key, counter);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        double sumsq = 0.0;
        for (std::int64_t i = 0; i < d_; ++i) {
            const double u = rs.u01();
            out[static_cast<std::size_t>(i)] = u;
            sumsq += u * u;
        }
        if (sumsq >= d2) {
            return;
        }
    }
    throw std::runtime_error("sample_mark_into: rejection stalled; truncation nearly degenerate");
}

double UniformCubeMeasure::mark_component_integral(double delta) const {
    check_delta(delta);
    const double d = static_cast<double>(d_);
    // V_{d-1} delta^{d+1} / ((d+1) 2^{d-1}) in log space for stability.
    const double log_vdm1 =
        0.5 * (d - 1.0) * std::log(std::numbers::pi) - std::lgamma((d - 1.0) / 2.0 + 1.0);
    const double ball_first_moment = std::exp(log_vdm1 + (d + 1.0) * std::log(delta) -
                                              std::log(d + 1.0) - (d - 1.0) * std::numbers::ln2);
    return lambda_ * (0.5 - ball_first_moment);
}

double mass_above(const LevyMeasure& m, double delta) { return m.mass_above(delta); }

void sample_mark(const LevyMeasure& m, double delta, const StreamKey& key, std::uint64_t counter,
                 std::span<double> out) {
    if (!(m.mass_above(delta) > 0.0)) {
        throw std::domain_error("sample_mark: measure has zero mass above delta");
    }
    m.sample_mark_into(delta, key, counter, out);
}

std::vector<double> sample_mark(const LevyMeasure& m, double delta, const StreamKey& key,
                                std::uint64_t counter) {
    std::vector<double> out(static_cast<std::size_t>(m.dimension()));
    sample_mark(m, delta, key, counter, std::span<double>(out));
    return out;
}

std::uint64_t sample_jump_count(const LevyMeasure& m, double delta, double dt,
                                const StreamKey& key, std::uint64_t counter) {
    return m.sample_jump_count(delta, dt, key, counter);
}

std::uint64_t sample_poisson(double mean, RandomStream& rs) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw std::domain_error("sample_poisson: mean must be finite and >= 0");
    }
    if (mean == 0.0) {
        return 0;
    }
    return (mean < 30.0) ? poisson_inversion(mean, rs) : poisson_ptrd(mean, rs);
}

}  // namespace mlpide
