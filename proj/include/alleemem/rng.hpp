#pragma once

#include <cstdint>
#include <initializer_list>

namespace alleemem {

// Small deterministic generator (splitmix64). All experiment randomness
// flows through explicit seeds so parallel and serial runs agree exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Unbiased integer in [0, n) (Lemire's method).
    std::uint64_t below(std::uint64_t n) {
        while (true) {
            std::uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo >= n || lo >= static_cast<std::uint64_t>(-n) % n)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

private:
    std::uint64_t state_;
};

// Mixes a tuple of parts into one 64-bit seed, so sub-streams like
// (seed, 3, sigma_index, pattern_index) are independent and reproducible.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x243F6A8885A308D3ull;
    for (std::uint64_t p : parts) {
        h ^= p + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        std::uint64_t z = h;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        h = z ^ (z >> 31);
    }
    return h;
}

}  // namespace alleemem
