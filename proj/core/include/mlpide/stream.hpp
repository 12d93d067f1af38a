// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mlpide {

// Hard cap on key path depth; exceeding it signals a runaway recursion.
inline constexpr std::size_t kMaxStreamDepth = 64;

class stream_depth_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Philox4x32-10 block function (Salmon et al., SC 2011).
struct PhiloxBlock {
    std::uint32_t x[4];
};

inline PhiloxBlock philox4x32_10(std::uint32_t k0, std::uint32_t k1, std::uint32_t c0,
                                 std::uint32_t c1, std::uint32_t c2, std::uint32_t c3) noexcept {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;
    std::uint32_t x0 = c0, x1 = c1, x2 = c2, x3 = c3;
    for (int r = 0; r < 10; ++r) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x2;
        const std::uint32_t y0 = static_cast<std::uint32_t>(p1 >> 32) ^ x1 ^ k0;
        const std::uint32_t y1 = static_cast<std::uint32_t>(p1);
        const std::uint32_t y2 = static_cast<std::uint32_t>(p0 >> 32) ^ x3 ^ k1;
        const std::uint32_t y3 = static_cast<std::uint32_t>(p0);
        x0 = y0;
        x1 = y1;
        x2 = y2;
        x3 = y3;
        k0 += kW0;
        k1 += kW1;
    }
    return PhiloxBlock{{x0, x1, x2, x3}};
}

// Hierarchical stream identity: a seed plus an ordered path of signed integers.
// Each distinct (seed, path) pair owns an independent counter-indexed stream;
// all draws are pure functions of (seed, path, counter), so replay is exact
// regardless of thread scheduling.
class StreamKey {
public:
    explicit StreamKey(std::uint64_t seed)
        : seed_(seed), chain_(mix64(seed)) {
        refresh();
    }

    // Appends `index` to the path. Throws stream_depth_error past kMaxStreamDepth.
    StreamKey child(std::int64_t index) const {
        if (path_.size() >= kMaxStreamDepth) {
            throw stream_depth_error("StreamKey::child: path depth exceeds limit");
        }
        StreamKey k(*this);
        k.path_.push_back(index);
        k.chain_ = mix64(chain_ ^ mix64(static_cast<std::uint64_t>(index)));
        k.refresh();
        return k;
    }

    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<std::int64_t>& path() const noexcept { return path_; }

    // Raw 64-bit draw: Philox keyed by the path hash, counter in words 0..1.
    std::uint64_t raw64(std::uint64_t counter) const noexcept {
        const PhiloxBlock b = philox4x32_10(
            static_cast<std::uint32_t>(key_), static_cast<std::uint32_t>(key_ >> 32),
            static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
            static_cast<std::uint32_t>(tag_), static_cast<std::uint32_t>(tag_ >> 32));
        return static_cast<std::uint64_t>(b.x[0]) | (static_cast<std::uint64_t>(b.x[1]) << 32);
    }

    // Collapses (seed, path) into a fresh 64-bit seed for derived experiments.
    std::uint64_t derived_seed() const noexcept { return mix64(chain_ ^ 0x2545F4914F6CDD1Dull); }

    friend bool operator==(const StreamKey& a, const StreamKey& b) noexcept {
        return a.seed_ == b.seed_ && a.path_ == b.path_;
    }

private:
    void refresh() noexcept {
        key_ = mix64(chain_ ^ 0xA0761D6478BD642Full);
        tag_ = mix64(chain_ ^ 0xE7037ED1A0B428DBull);
    }

    std::uint64_t seed_;
    std::vector<std::int64_t> path_;
    std::uint64_t chain_;  // running hash of seed and path
    std::uint64_t key_ = 0;
    std::uint64_t tag_ = 0;
};

inline StreamKey child(const StreamKey& key, std::int64_t index) { return key.child(index); }

// Bit-to-double transforms, exposed for direct testing of the extremes.
// [0,1): 53-bit lattice. (0,1): 52-bit lattice shifted by half a cell — with
// 52 bits the +0.5 is exactly representable, so the result can never round
// up to 1.0 (a 53-bit half-shift ties to 2^53 at the top and breaks the open
// interval).
inline double u01_from_bits(std::uint64_t r64) noexcept {
    return static_cast<double>(r64 >> 11) * 0x1.0p-53;
}
inline double u01_open_from_bits(std::uint64_t r64) noexcept {
    return (static_cast<double>(r64 >> 12) + 0.5) * 0x1.0p-52;
}

// Uniform on [0,1), 53-bit resolution.
inline double uniform01(const StreamKey& key, std::uint64_t counter) noexcept {
    return u01_from_bits(key.raw64(counter));
}

// Uniform on the open interval (0,1); safe input for inverse-CDF transforms.
inline double uniform01_open(const StreamKey& key, std::uint64_t counter) noexcept {
    return u01_open_from_bits(key.raw64(counter));
}

// Inverse of the standard normal CDF (Wichura's AS 241, double precision).
double inverse_normal_cdf(double p);

// One standard normal variate at `counter`.
inline double gauss(const StreamKey& key, std::uint64_t counter) {
    return inverse_normal_cdf(uniform01_open(key, counter));
}

// d i.i.d. standard normals into out[0..d), consuming counters [counter, counter+d).
void gauss_vector(const StreamKey& key, std::uint64_t counter, std::int64_t d, double* out);
std::vector<double> gauss_vector(const StreamKey& key, std::uint64_t counter, std::int64_t d);

// Consuming view of one stream for samplers with data-dependent draw counts.
// Never reuses a counter; total consumption is visible through next_counter().
class RandomStream {
public:
    explicit RandomStream(StreamKey key, std::uint64_t start = 0)
        : key_(std::move(key)), next_(start) {}

    double u01() noexcept { return uniform01(key_, next_++); }
    double u01_open() noexcept { return uniform01_open(key_, next_++); }
    double gauss() { return inverse_normal_cdf(u01_open()); }
    std::uint64_t next_counter() const noexcept { return next_; }
    const StreamKey& key() const noexcept { return key_; }

private:
    StreamKey key_;
    std::uint64_t next_;
};

}  // namespace mlpide
