#pragma once

// Shared helpers for the unit suites: deterministic random vectors and
// subsets driven by std::mt19937_64, kept apart from the generators under
// test.

#include <random>

#include "cihash/bitvector.hpp"
#include "cihash/strategy.hpp"

namespace cihash::test {

inline BitVector random_vector(std::mt19937_64& rng, std::size_t width)
{
    BitVector v(width);
    for (std::size_t i = 1; i <= width; ++i) {
        if (rng() & 1u) {
            v.set(i, true);
        }
    }
    return v;
}

inline StrategySubset random_subset(std::mt19937_64& rng, std::size_t width)
{
    return StrategySubset::from_mask(random_vector(rng, width));
}

inline StrategySequence random_sequence(std::mt19937_64& rng, std::size_t width,
                                        std::size_t terms)
{
    StrategySequence seq(width);
    for (std::size_t i = 0; i < terms; ++i) {
        seq.push_back(random_subset(rng, width));
    }
    return seq;
}

inline std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t count)
{
    std::vector<std::uint8_t> bytes(count);
    for (auto& b : bytes) {
        b = static_cast<std::uint8_t>(rng());
    }
    return bytes;
}

}  // namespace cihash::test
