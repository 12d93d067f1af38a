// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mlpide/stream.hpp"

namespace mlpide {

// Jump-size measure contract. A concrete family supplies the tail mass
// nu({z : |z| >= delta}) and a sampler for nu restricted to that set,
// normalized. Everything is pure: randomness flows through key/counter.
class LevyMeasure {
public:
    virtual ~LevyMeasure() = default;

    std::int64_t dimension() const noexcept { return d_; }
    const std::string& family() const noexcept { return family_; }

    // nu({z : |z| >= delta}), finite and non-increasing in delta.
    // delta outside (0,1) is a domain error.
    virtual double mass_above(double delta) const = 0;

    // One draw from the normalized restriction of nu to {|z| >= delta},
    // written into out[0..d). Deterministic given (key, counter).
    virtual void sample_mark_into(double delta, const StreamKey& key, std::uint64_t counter,
                                  std::span<double> out) const = 0;

    // Jump count over a window of length dt: Poisson(mass_above(delta) * dt).
    virtual std::uint64_t sample_jump_count(double delta, double dt, const StreamKey& key,
                                            std::uint64_t counter) const;

protected:
    LevyMeasure(std::int64_t d, std::string family);

    std::int64_t d_;
    std::string family_;
};

// nu(dz) = lambda * 1_{[0,1]^d}(z) dz: uniform density on the unit cube with
// total mass lambda. Tail masses and first moments over the truncation set
// are available in closed form.
class UniformCubeMeasure final : public LevyMeasure {
public:
    UniformCubeMeasure(std::int64_t d, double lambda);

    double intensity() const noexcept { return lambda_; }

    double mass_above(double delta) const override;

    // Rejection from the cube: accept when |z| >= delta. Acceptance equals
    // 1 - lambda^{-1} * (nu-mass of the delta ball), near 1 for small delta.
    void sample_mark_into(double delta, const StreamKey& key, std::uint64_t counter,
                          std::span<double> out) const override;

    // Integral of z_i over {|z| >= delta} under nu, identical for every
    // coordinate: lambda * (1/2 - V_{d-1} delta^{d+1} / ((d+1) 2^{d-1}))
    // with V_k the k-ball volume. Exact-compensator oracle for tests.
    double mark_component_integral(double delta) const;

private:
    // nu-mass of {|z| < delta} within the cube: lambda * orthant ball volume.
    double ball_mass(double delta) const;

    double lambda_;
};

// Free-function forms mirroring the measure contract.
double mass_above(const LevyMeasure& m, double delta);

void sample_mark(const LevyMeasure& m, double delta, const StreamKey& key, std::uint64_t counter,
                 std::span<double> out);
std::vector<double> sample_mark(const LevyMeasure& m, double delta, const StreamKey& key,
                                std::uint64_t counter);

std::uint64_t sample_jump_count(const LevyMeasure& m, double delta, double dt,
                                const StreamKey& key, std::uint64_t counter);

// Poisson(mean) draw. Inversion by search below mean 30, transformed
// rejection (Hormann's PTRD) above; consumes a data-dependent number of
// uniforms from rs.
std::uint64_t sample_poisson(double mean, RandomStream& rs);

}  // namespace mlpide
