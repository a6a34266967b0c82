#include "ebchan/random.hpp"

#include <cmath>
#include <numbers>

namespace ebchan {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec3 Rng::unit_vector() noexcept {
    for (;;) {
        const Vec3 g{gaussian(), gaussian(), gaussian()};
        const double len = norm(g);
        if (len > 1e-12) return {g[0] / len, g[1] / len, g[2] / len};
    }
}

}  // namespace ebchan
