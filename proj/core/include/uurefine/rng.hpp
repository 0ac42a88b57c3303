#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace uurefine {

/// One splitmix64 step. Advances `state` and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Stateless mix of a seed with a stream index or sample id. Depends only on
/// its two arguments, independent of evaluation order.
inline std::uint64_t hash_mix(std::uint64_t seed, std::uint64_t value) {
    std::uint64_t s = seed ^ (value + 0x9E3779B97F4A7C15ull) * 0xFF51AFD7ED558CCDull;
    splitmix64(s);
    return splitmix64(s);
}

/// Derives an independent sub-seed for a named stream of a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return hash_mix(base, stream);
}

/// Maps 64 random bits to a double in [0, 1).
inline double unit_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Deterministic random source. Wraps std::mt19937_64, whose output sequence
/// is pinned by the standard, and implements every distribution transform
/// explicitly so identical seeds give identical streams on any platform or
/// standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double next_unit() { return unit_from_bits(next_u64()); }

    /// Standard normal via Box-Muller; consumes exactly two uniform draws.
    double next_normal() {
        double u1 = 1.0 - next_unit(); // (0, 1], keeps log finite
        double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    /// Uniform integer in [0, n). Requires n > 0.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::mt19937_64 engine_;
};

} // namespace uurefine
