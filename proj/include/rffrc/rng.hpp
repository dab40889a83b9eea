#pragma once

// Deterministic random streams. Feature maps must be reproducible from a
// 64-bit seed alone, and each feature block draws from its own substream so
// that resampling one block never perturbs another. std::mt19937_64 has a
// standard-specified output sequence; the uniform and Gaussian transforms
// below are hand-rolled because the std::*_distribution adaptors are
// implementation-defined.

#include <cmath>
#include <cstdint>
#include <random>

namespace rffrc::rng {

/// SplitMix64 finalizer, used to hash substream indices into seed space.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for substream `index` of a master seed: seed XOR hash(index).
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return seed ^ splitmix64(index + 1);
}

/// A seeded stream of uniform and Gaussian deviates.
///
/// Uniforms take the top 53 bits of each mt19937_64 draw, so values lie on
/// the half-open grid [0, 1). Gaussians use the Box-Muller transform; the
/// paired deviate is cached and returned on the next call.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal deviate.
    double gauss() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // 1 - u in (0, 1] keeps the log argument away from zero.
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace rffrc::rng
