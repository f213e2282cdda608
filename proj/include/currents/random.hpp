#pragma once

// Seeded sampling that is bit-identical across standard libraries: the
// engine is std::mt19937_64 (fully specified by the standard) and bounded
// draws use rejection sampling instead of std::uniform_int_distribution,
// whose algorithm is implementation-defined.

#include <cstdint>
#include <limits>
#include <random>

namespace currents {

/// splitmix64 finalizer; derives independent per-trial seeds from one root seed.
inline std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream) {
    std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class TrialRng {
public:
    TrialRng(std::uint64_t root_seed, std::uint64_t trial) : engine_(mix_seed(root_seed, trial)) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace currents
