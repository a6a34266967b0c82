#pragma once

#include <cstdint>
#include <random>

#include "ebchan/linalg.hpp"

namespace ebchan {

/// Identifier written into reports. Bump the suffix whenever any step of the
/// sampling pipeline changes.
inline constexpr const char* kPrngId = "mt19937_64+splitmix64-streams+box-muller/v1";

/// Independent 64-bit seed for sub-stream `stream` of `seed` (splitmix64).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Deterministic sampler. std::mt19937_64 has a standardized output sequence;
/// the distributions are implemented here instead of using the
/// implementation-defined <random> distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    /// Standard normal (Box-Muller, cosine branch).
    double gaussian() noexcept;
    /// Uniform on the unit sphere (normalized Gaussian triple).
    Vec3 unit_vector() noexcept;

private:
    std::mt19937_64 engine_;
};

}  // namespace ebchan
