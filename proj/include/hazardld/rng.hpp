#pragma once

#include <cstdint>

namespace hazardld::rng {

// Counter-based generator: every draw is a pure function of (seed, counter),
// so streams are reproducible bit-for-bit across platforms and can be split
// without shared state. The mixer is the splitmix64 finalizer.

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

[[nodiscard]] constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

[[nodiscard]] constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t counter) noexcept {
    return mix(seed + (counter + 1) * golden_gamma);
}

/// Uniform draw in the open interval (0,1): 53 random bits centered on the
/// representable midpoints, so 0 and 1 never occur.
[[nodiscard]] constexpr double uniform01(std::uint64_t seed, std::uint64_t counter) noexcept {
    return (static_cast<double>(at(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

/// Decorrelated child seed for an indexed substream (per Monte Carlo trial).
[[nodiscard]] constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t index) noexcept {
    return at(seed ^ 0x5851F42D4C957F2Dull, index);
}

}  // namespace hazardld::rng
