#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace harfe {

// SplitMix64 (Steele/Lea/Flood 2014): a counter-based 64-bit generator.
// The state advances by a fixed odd constant and the output is a bijective
// mix of the state, so the stream for a given seed is reproducible on any
// platform. All higher-level draws (uniforms, Gaussians, subsets) are built
// on this one primitive with fixed algorithms, which keeps FeatureMap and
// dataset generation bit-identical across toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [a, b).
    double next_uniform(double a, double b) { return a + (b - a) * next_double(); }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0, 1] so log(u1) is finite.
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * 3.14159265358979323846 * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // k distinct indices from [0, n), uniformly, via partial Fisher-Yates.
    // Returned sorted ascending.
    std::vector<std::uint32_t> next_subset(std::uint32_t n, std::uint32_t k);

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

inline std::vector<std::uint32_t> SplitMix64::next_subset(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(next_below(n - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::uint32_t> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Purpose tags keep unrelated substreams of one master seed disjoint.
enum class Stream : std::uint64_t {
    ColumnWeights = 1,
    ColumnBias = 2,
    DataInputs = 3,
    DataNoise = 4,
    Split = 5,
    Trial = 6,
    Planted = 7,
    Features = 8,
};

// Derives the seed of substream (purpose, index) of `seed`. Both arguments
// pass through the SplitMix64 output mix before combining, so consecutive
// indices land on unrelated points of the state space.
inline std::uint64_t substream(std::uint64_t seed, Stream purpose, std::uint64_t index) {
    std::uint64_t a = mix64(seed + 0x9E3779B97F4A7C15ULL);
    std::uint64_t b = mix64(static_cast<std::uint64_t>(purpose) * 0xBF58476D1CE4E5B9ULL + 0x6A09E667F3BCC909ULL);
    std::uint64_t c = mix64(index + 0x3C6EF372FE94F82BULL);
    return mix64(a ^ (b + 0x9E3779B97F4A7C15ULL * c));
}

}  // namespace rng
}  // namespace harfe
