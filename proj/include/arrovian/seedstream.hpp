#pragma once

#include <cstdint>

#include "arrovian/classes.hpp"

namespace arrovian {

/// SplitMix64, bit-exact: the seed expander behind every seeded feature.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

/// Bit stream over SplitMix64 words, most-significant bit first.
class SeedBits final : public BitSource {
public:
    explicit SeedBits(std::uint64_t seed) : rng_(seed) {}

    int next_bit() override {
        if (left_ == 0) {
            word_ = rng_.next();
            left_ = 64;
        }
        --left_;
        return static_cast<int>((word_ >> left_) & 1ull);
    }

private:
    SplitMix64 rng_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

} // namespace arrovian
