#pragma once

#include <cstdint>
#include <random>

namespace trevi {

/// SplitMix64 finalizer; the seed-derivation primitive.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent sub-seed for (master, index). Runs and residual streams each
/// derive their own seed, so ensemble results do not depend on scheduling.
constexpr std::uint64_t derive_subseed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index * 0xD1B54A32D192ED03ULL + 1));
}

/// Uniform draws in (0,1] and [0,1) from a fully specified engine, identical
/// across platforms.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in (0, 1].
    double next_open() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }
    /// Uniform in [0, 1).
    double next_halfopen() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// Standard-normal stream via Box-Muller on the uniform stream above. The
/// standard library's normal_distribution is implementation-defined, so the
/// transform is spelled out here to keep simulated paths reproducible.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : uniforms_(seed) {}

    double next();

private:
    UniformStream uniforms_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace trevi
