#pragma once

#include <cstdint>

namespace insdel {

// splitmix64 stream. Chosen over std::mt19937_64 + distributions because the
// standard distributions are not bit-reproducible across library
// implementations, and every experiment here must replay byte-identically
// from (config, seed).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Inclusive range.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Independent child stream for trial/attempt `stream` of a run seeded with
// `seed`; stable across platforms.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xA0761D6478BD642Full * (stream + 1)));
    r.next();
    return r.next();
}

} // namespace insdel
