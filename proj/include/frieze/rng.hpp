#pragma once

/// Deterministic random helper. All randomness in the library flows through
/// explicit 64-bit seeds; the raw mt19937_64 stream plus rejection sampling
/// keeps results identical across platforms and standard libraries.

#include <cstdint>
#include <random>

namespace frieze {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 gen_;
};

} // namespace frieze
