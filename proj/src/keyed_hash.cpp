#include "cihash/keyed_hash.hpp"

#include <limits>
#include <stdexcept>

namespace cihash {

void validate(const HashKey& key)
{
    if (key.k2 < 1) {
        throw std::invalid_argument("k2 must be at least 1");
    }
}

BitVector encode_k3(std::uint64_t k3, std::size_t width)
{
    return BitVector::from_uint(k3, width);
}

NormalizedMessage normalize(std::span<const std::uint8_t> message, std::size_t width)
{
    if (width == 0) {
        throw std::invalid_argument("normalization width must be at least 1");
    }
    if (message.size() > std::numeric_limits<std::uint64_t>::max() / 8) {
        throw std::invalid_argument("message too long for the 64-bit length field");
    }
    const std::uint64_t message_bits = static_cast<std::uint64_t>(message.size()) * 8;
    const std::uint64_t zeros = (width - (message_bits + 65) % width) % width;
    const std::uint64_t total_bits = message_bits + 65 + zeros;

    NormalizedMessage out;
    out.total_bits = total_bits;
    out.blocks.reserve(static_cast<std::size_t>(total_bits / width));

    if (width % 8 == 0) {
        // Byte-aligned path: message, 0x80, zero bytes, 8-byte length.
        std::vector<std::uint8_t> padded(static_cast<std::size_t>(total_bits / 8), 0);
        std::copy(message.begin(), message.end(), padded.begin());
        padded[message.size()] = 0x80;
        for (int i = 0; i < 8; ++i) {
            padded[padded.size() - 1 - i] = static_cast<std::uint8_t>(message_bits >> (8 * i));
        }
        const std::size_t block_bytes = width / 8;
        for (std::size_t offset = 0; offset < padded.size(); offset += block_bytes) {
            out.blocks.push_back(BitVector::from_bytes(
                std::span(padded.data() + offset, block_bytes)));
        }
        return out;
    }

    // General bit-level path for widths that are not byte multiples.
    const auto padded_bit = [&](std::uint64_t pos) -> bool {
        if (pos < message_bits) {
            return (message[static_cast<std::size_t>(pos / 8)] >> (7 - pos % 8)) & 1u;
        }
        if (pos == message_bits) {
            return true;
        }
        if (pos < message_bits + 1 + zeros) {
            return false;
        }
        const std::uint64_t length_bit = pos - (message_bits + 1 + zeros);
        return (message_bits >> (63 - length_bit)) & 1u;
    };
    for (std::uint64_t start = 0; start < total_bits; start += width) {
        BitVector block(width);
        for (std::size_t j = 0; j < width; ++j) {
            if (padded_bit(start + j)) {
                block.set(j + 1, true);
            }
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

NormalizedMessage premix(const NormalizedMessage& message, const StrategySequence& strategy,
                         const BitVector& k3vec)
{
    if (strategy.empty()) {
        throw std::invalid_argument("premix needs at least one strategy term");
    }
    require_same_width(strategy.term(0).mask(), k3vec);

    NormalizedMessage out;
    out.total_bits = message.total_bits;
    out.blocks.reserve(message.blocks.size());
    for (std::size_t j = 0; j < message.blocks.size(); ++j) {
        out.blocks.push_back(message.blocks[j] ^ strategy.term(j % strategy.size()).mask() ^
                             k3vec);
    }
    return out;
}

BitVector inner_digest(digest::Algorithm alg, const BitVector& k3vec,
                       const NormalizedMessage& message)
{
    std::vector<std::uint8_t> input = k3vec.to_bytes();
    input.reserve(input.size() + message.blocks.size() * (k3vec.width() / 8));
    for (const BitVector& block : message.blocks) {
        const std::vector<std::uint8_t> bytes = block.to_bytes();
        input.insert(input.end(), bytes.begin(), bytes.end());
    }
    return BitVector::from_bytes(digest::compute(alg, input));
}

BitVector ci_posttreatment(BitVector digest_value, const StrategySequence& strategy,
                           const IterationFunction& f)
{
    for (std::size_t i = 0; i < strategy.size(); ++i) {
        digest_value = apply_f_on_subset(f, strategy.term(i), digest_value);
    }
    return digest_value;
}

BitVector keyed_hash(const HashKey& key, std::span<const std::uint8_t> message,
                     digest::Algorithm alg, const GeneratorSpec& generator,
                     const IterationFunction& f)
{
    validate(key);
    const std::size_t width = digest::output_bits(alg);

    GeneratorSpec seeded = generator;
    seeded.seed = key.k1;
    const StrategySequence strategy =
        strategy_vectors(seeded, static_cast<std::size_t>(key.k2), width);

    const BitVector k3vec = encode_k3(key.k3, width);
    const NormalizedMessage mixed = premix(normalize(message, width), strategy, k3vec);
    return ci_posttreatment(inner_digest(alg, k3vec, mixed), strategy, f);
}

BitVector keyed_hash(const HashKey& key, std::span<const std::uint8_t> message,
                     digest::Algorithm alg, GeneratorKind generator,
                     const IterationFunction& f)
{
    return keyed_hash(key, message, alg, GeneratorSpec::make(generator, key.k1), f);
}

std::string hexdigest(const BitVector& value)
{
    return value.to_hex();
}

}  // namespace cihash
