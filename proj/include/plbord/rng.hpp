#pragma once

#include <cstdint>

namespace plbord {

// Deterministic cross-platform generator (splitmix64). std::uniform_*
// distributions are implementation-defined, so all sampling goes through
// the helpers below.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        // Lemire rejection-free-ish; rejection loop keeps exact uniformity.
        std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Derive an independent stream (for per-trial determinism).
    Rng fork(std::uint64_t stream) const {
        Rng child(state_ ^ (0xd1342543de82ef95ULL * (stream + 1)));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

}  // namespace plbord
