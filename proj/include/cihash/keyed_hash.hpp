#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cihash/bitvector.hpp"
#include "cihash/ciprng.hpp"
#include "cihash/digests.hpp"
#include "cihash/gfci.hpp"
#include "cihash/strategy.hpp"

namespace cihash {

/// The key triple: k1 seeds the strategy generator, k2 is the strategy length
/// and iteration count, k3 is folded into the digest input as an N-bit vector.
struct HashKey {
    std::uint64_t k1 = 50;
    std::uint64_t k2 = 2;
    std::uint64_t k3 = 50;
};

/// Throws std::invalid_argument unless k2 >= 1.
void validate(const HashKey& key);

/// k3 as a width-bit big-endian vector, zero-extended (masked when width < 64).
BitVector encode_k3(std::uint64_t k3, std::size_t width);

/// A message padded to a whole number of width-bit blocks.
struct NormalizedMessage {
    std::vector<BitVector> blocks;
    std::uint64_t total_bits = 0;
};

/// Merkle-Damgard strengthening with modulus `width`: append a 1 bit, the
/// minimum run of 0 bits, then the 64-bit big-endian bit length of the
/// original message. At least 65 bits are always appended, so even an empty
/// message yields one block.
NormalizedMessage normalize(std::span<const std::uint8_t> message, std::size_t width);

/// Block j of the result is X^j xor S^(j mod k2) xor k3vec, where k2 is the
/// number of strategy terms.
NormalizedMessage premix(const NormalizedMessage& message, const StrategySequence& strategy,
                         const BitVector& k3vec);

/// Digest of (k3vec as bytes) followed by the message blocks as bytes, in
/// order; returns the digest as a bit vector.
BitVector inner_digest(digest::Algorithm alg, const BitVector& k3vec,
                       const NormalizedMessage& message);

/// Chaotic-iterations post-treatment: one apply_f_on_subset round per strategy
/// term, in order. With the negation function this reduces to XOR-folding the
/// strategy masks into the digest.
BitVector ci_posttreatment(BitVector digest_value, const StrategySequence& strategy,
                           const IterationFunction& f = negation_function());

/// The full keyed hash: derive k2 strategy vectors from k1 via the XOR CIPRNG,
/// normalize and premix the message with them and k3, digest, then post-treat.
BitVector keyed_hash(const HashKey& key, std::span<const std::uint8_t> message,
                     digest::Algorithm alg, const GeneratorSpec& generator,
                     const IterationFunction& f = negation_function());
BitVector keyed_hash(const HashKey& key, std::span<const std::uint8_t> message,
                     digest::Algorithm alg, GeneratorKind generator,
                     const IterationFunction& f = negation_function());

/// Uppercase hex rendering, width/4 characters; requires width % 4 == 0.
std::string hexdigest(const BitVector& value);

}  // namespace cihash
