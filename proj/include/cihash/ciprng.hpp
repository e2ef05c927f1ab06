#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "cihash/bitvector.hpp"
#include "cihash/strategy.hpp"

namespace cihash {

enum class GeneratorKind { bbs, lcg, mt19937, xorshift, rc4, lfsr };

inline constexpr GeneratorKind all_generator_kinds[] = {
    GeneratorKind::bbs, GeneratorKind::lcg,  GeneratorKind::mt19937,
    GeneratorKind::xorshift, GeneratorKind::rc4, GeneratorKind::lfsr,
};

std::string_view generator_name(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator(std::string_view name);

/// Blum-Blum-Shub modulus factors. The defaults are small Blum primes chosen
/// for desk-scale speed, not cryptographic strength.
struct BbsParams {
    std::uint32_t p = 499;
    std::uint32_t q = 547;
};

/// Which generator to run and how to seed it. The seed is reduced into each
/// generator's valid domain by a fixed rule (see RawBitStream), so equal specs
/// always produce identical streams.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::bbs;
    std::uint64_t seed = 0;
    BbsParams bbs{};

    static GeneratorSpec make(GeneratorKind kind, std::uint64_t seed)
    {
        return GeneratorSpec{kind, seed, {}};
    }
};

/// Uniform bit-extraction layer over the six generators. Words are emitted
/// most significant bit first and concatenated into one infinite bit stream;
/// consuming never re-reads earlier output.
///
/// Seeding rules (fixed for cross-run reproducibility):
///   bbs      x0 = seed^2 mod pq, re-derived as (x0+1)^2 mod pq while x0 is
///            0 or 1; each step squares the state and emits its low bit
///   lcg      x = seed mod 2^32; step x <- 1664525 x + 1013904223 mod 2^32,
///            emitting the full word
///   mt19937  standard MT19937 initialization from seed mod 2^32, 32-bit words
///   xorshift 32-bit Marsaglia shifts (13, 17, 5); seed mod 2^32, 0 mapped to 1
///   rc4      standard KSA/PRGA, key = 4-byte big-endian seed mod 2^32, bytes
///   lfsr     32-bit Fibonacci LFSR with taps {32,22,2,1}; seed mod 2^32,
///            0 mapped to 1; emits the bit shifted out each step
class RawBitStream {
public:
    explicit RawBitStream(const GeneratorSpec& spec);

    std::uint8_t next_bit();
    /// Next `count` bits as 0/1 values; count may be zero.
    std::vector<std::uint8_t> take_bits(std::size_t count);
    /// Next `width` bits packed into a BitVector, index 1 first.
    BitVector take_vector(std::size_t width);

    const GeneratorSpec& spec() const noexcept { return spec_; }

private:
    void refill();

    GeneratorSpec spec_;

    std::uint64_t bbs_m_ = 0;
    std::uint64_t bbs_x_ = 0;
    std::uint32_t lcg_x_ = 0;
    std::mt19937 mt_;
    std::uint32_t xs_y_ = 0;
    std::array<std::uint8_t, 256> rc4_s_{};
    std::uint8_t rc4_i_ = 0;
    std::uint8_t rc4_j_ = 0;
    std::uint32_t lfsr_r_ = 0;

    std::uint64_t buf_ = 0;  // pending bits, most significant first
    unsigned buf_bits_ = 0;
};

/// XOR CIPRNG stream of width-N vectors: x^{n+1} = x^n xor S^n where S^n is
/// the next N raw bits. The initial state x^0 is the all-zero vector, so the
/// first output equals the first raw vector.
class CiprngStream {
public:
    CiprngStream(const GeneratorSpec& spec, std::size_t width);

    const BitVector& state() const noexcept { return state_; }
    std::size_t width() const noexcept { return state_.width(); }

    /// Advance once and return the new state.
    BitVector next();

private:
    RawBitStream raw_;
    BitVector state_;
};

/// Run an XOR CIPRNG for `count` steps and collect the outputs as strategy
/// subsets (each output vector read as a membership mask).
StrategySequence strategy_vectors(const GeneratorSpec& spec, std::size_t count,
                                  std::size_t width);

}  // namespace cihash
