#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cihash {

/// Fixed-width vector of Boolean cells, indexed 1..N where index 1 is the
/// leftmost bit, i.e. the most significant nibble of the hex rendering.
/// Vectors of different widths never compare or combine; mixing widths throws.
class BitVector {
public:
    explicit BitVector(std::size_t width);

    /// Parse a string of '0'/'1' characters, leftmost character = index 1.
    static BitVector from_bits(std::string_view bits);
    /// Parse hex digits (either case); width becomes 4 * digit count.
    static BitVector from_hex(std::string_view hex);
    /// Wrap raw bytes, first byte's MSB = index 1; width becomes 8 * size.
    static BitVector from_bytes(std::span<const std::uint8_t> bytes);
    /// Big-endian encoding of an integer, zero-extended (or truncated) to
    /// `width` bits: index `width` carries the least significant bit.
    static BitVector from_uint(std::uint64_t value, std::size_t width);

    std::size_t width() const noexcept { return width_; }

    bool get(std::size_t index) const;
    void set(std::size_t index, bool value);

    std::size_t popcount() const noexcept;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs)
    {
        lhs ^= rhs;
        return lhs;
    }

    /// Bitwise complement (the vectorial negation of every cell).
    BitVector complement() const;

    bool operator==(const BitVector&) const noexcept = default;

    std::string to_bit_string() const;
    /// Uppercase hex, most significant nibble first; requires width % 4 == 0.
    std::string to_hex() const;
    /// Packed bytes, MSB-first; requires width % 8 == 0.
    std::vector<std::uint8_t> to_bytes() const;

private:
    std::size_t width_ = 0;
    std::vector<std::uint8_t> bytes_;  // MSB-first packing; pad bits stay zero

    void check_index(std::size_t index) const;
};

/// Throws std::invalid_argument unless both vectors have the same width.
void require_same_width(const BitVector& a, const BitVector& b);

}  // namespace cihash
