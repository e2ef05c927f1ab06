#include "cihash/ciprng.hpp"

#include <stdexcept>

namespace cihash {

std::string_view generator_name(GeneratorKind kind)
{
    switch (kind) {
        case GeneratorKind::bbs: return "bbs";
        case GeneratorKind::lcg: return "lcg";
        case GeneratorKind::mt19937: return "mt";
        case GeneratorKind::xorshift: return "xorshift";
        case GeneratorKind::rc4: return "rc4";
        case GeneratorKind::lfsr: return "lfsr";
    }
    throw std::invalid_argument("unknown generator kind");
}

std::optional<GeneratorKind> parse_generator(std::string_view name)
{
    for (const GeneratorKind kind : all_generator_kinds) {
        if (name == generator_name(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

RawBitStream::RawBitStream(const GeneratorSpec& spec) : spec_(spec)
{
    const std::uint32_t seed32 = static_cast<std::uint32_t>(spec.seed);
    switch (spec.kind) {
        case GeneratorKind::bbs: {
            if (spec.bbs.p == 0 || spec.bbs.q == 0) {
                throw std::invalid_argument("bbs factors must be nonzero");
            }
            bbs_m_ = static_cast<std::uint64_t>(spec.bbs.p) * spec.bbs.q;
            std::uint64_t x = (spec.seed % bbs_m_) * (spec.seed % bbs_m_) % bbs_m_;
            while (x == 0 || x == 1) {
                x = (x + 1) * (x + 1) % bbs_m_;
            }
            bbs_x_ = x;
            break;
        }
        case GeneratorKind::lcg:
            lcg_x_ = seed32;
            break;
        case GeneratorKind::mt19937:
            mt_.seed(seed32);
            break;
        case GeneratorKind::xorshift:
            xs_y_ = seed32 == 0 ? 1u : seed32;
            break;
        case GeneratorKind::rc4: {
            const std::uint8_t key[4] = {
                static_cast<std::uint8_t>(seed32 >> 24),
                static_cast<std::uint8_t>(seed32 >> 16),
                static_cast<std::uint8_t>(seed32 >> 8),
                static_cast<std::uint8_t>(seed32),
            };
            for (int i = 0; i < 256; ++i) {
                rc4_s_[i] = static_cast<std::uint8_t>(i);
            }
            std::uint8_t j = 0;
            for (int i = 0; i < 256; ++i) {
                j = static_cast<std::uint8_t>(j + rc4_s_[i] + key[i % 4]);
                std::swap(rc4_s_[i], rc4_s_[j]);
            }
            break;
        }
        case GeneratorKind::lfsr:
            lfsr_r_ = seed32 == 0 ? 1u : seed32;
            break;
    }
}

void RawBitStream::refill()
{
    switch (spec_.kind) {
        case GeneratorKind::bbs:
            bbs_x_ = bbs_x_ * bbs_x_ % bbs_m_;
            buf_ = (buf_ << 1) | (bbs_x_ & 1u);
            buf_bits_ += 1;
            break;
        case GeneratorKind::lcg:
            lcg_x_ = 1664525u * lcg_x_ + 1013904223u;
            buf_ = (buf_ << 32) | lcg_x_;
            buf_bits_ += 32;
            break;
        case GeneratorKind::mt19937:
            buf_ = (buf_ << 32) | static_cast<std::uint32_t>(mt_());
            buf_bits_ += 32;
            break;
        case GeneratorKind::xorshift:
            xs_y_ ^= xs_y_ << 13;
            xs_y_ ^= xs_y_ >> 17;
            xs_y_ ^= xs_y_ << 5;
            buf_ = (buf_ << 32) | xs_y_;
            buf_bits_ += 32;
            break;
        case GeneratorKind::rc4: {
            rc4_i_ = static_cast<std::uint8_t>(rc4_i_ + 1);
            rc4_j_ = static_cast<std::uint8_t>(rc4_j_ + rc4_s_[rc4_i_]);
            std::swap(rc4_s_[rc4_i_], rc4_s_[rc4_j_]);
            const std::uint8_t out =
                rc4_s_[static_cast<std::uint8_t>(rc4_s_[rc4_i_] + rc4_s_[rc4_j_])];
            buf_ = (buf_ << 8) | out;
            buf_bits_ += 8;
            break;
        }
        case GeneratorKind::lfsr: {
            const std::uint32_t out = lfsr_r_ & 1u;
            const std::uint32_t feedback =
                (lfsr_r_ ^ (lfsr_r_ >> 1) ^ (lfsr_r_ >> 21) ^ (lfsr_r_ >> 31)) & 1u;
            lfsr_r_ = (lfsr_r_ >> 1) | (feedback << 31);
            buf_ = (buf_ << 1) | out;
            buf_bits_ += 1;
            break;
        }
    }
}

std::uint8_t RawBitStream::next_bit()
{
    if (buf_bits_ == 0) {
        refill();
    }
    --buf_bits_;
    return static_cast<std::uint8_t>((buf_ >> buf_bits_) & 1u);
}

std::vector<std::uint8_t> RawBitStream::take_bits(std::size_t count)
{
    std::vector<std::uint8_t> bits;
    bits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        bits.push_back(next_bit());
    }
    return bits;
}

BitVector RawBitStream::take_vector(std::size_t width)
{
    BitVector v(width);
    for (std::size_t i = 1; i <= width; ++i) {
        if (next_bit()) {
            v.set(i, true);
        }
    }
    return v;
}

CiprngStream::CiprngStream(const GeneratorSpec& spec, std::size_t width)
    : raw_(spec), state_(width)
{
}

BitVector CiprngStream::next()
{
    state_ ^= raw_.take_vector(state_.width());
    return state_;
}

StrategySequence strategy_vectors(const GeneratorSpec& spec, std::size_t count,
                                  std::size_t width)
{
    CiprngStream stream(spec, width);  // rejects width 0
    StrategySequence sequence(width);
    for (std::size_t i = 0; i < count; ++i) {
        sequence.push_back(StrategySubset::from_mask(stream.next()));
    }
    return sequence;
}

}  // namespace cihash
