#ifndef PUNCTUAL_RNG_HPP
#define PUNCTUAL_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace punctual {

// Deterministic random source: std::mt19937_64 plus a hand-rolled rejection
// sampler. std::uniform_int_distribution is not bit-stable across standard
// library implementations, and several tests freeze seeded draws, so the
// mapping from raw engine output to integers is fixed here.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return lo + static_cast<long>(r % span);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace punctual

#endif
