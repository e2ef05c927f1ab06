#include "cihash/bitvector.hpp"

#include <bit>
#include <stdexcept>

namespace cihash {

namespace {

std::uint8_t last_byte_mask(std::size_t width)
{
    const std::size_t tail = width % 8;
    return tail == 0 ? 0xFFu : static_cast<std::uint8_t>(0xFFu << (8 - tail));
}

int hex_value(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitVector::BitVector(std::size_t width) : width_(width), bytes_((width + 7) / 8, 0)
{
    if (width == 0) {
        throw std::invalid_argument("BitVector width must be at least 1");
    }
}

BitVector BitVector::from_bits(std::string_view bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        }
        if (c == '1') {
            v.set(i + 1, true);
        }
    }
    return v;
}

BitVector BitVector::from_hex(std::string_view hex)
{
    BitVector v(hex.size() * 4);
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const int nibble = hex_value(hex[i]);
        if (nibble < 0) {
            throw std::invalid_argument("invalid hex digit");
        }
        const std::size_t byte = i / 2;
        if (i % 2 == 0) {
            v.bytes_[byte] |= static_cast<std::uint8_t>(nibble << 4);
        } else {
            v.bytes_[byte] |= static_cast<std::uint8_t>(nibble);
        }
    }
    return v;
}

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bytes)
{
    BitVector v(bytes.size() * 8);
    v.bytes_.assign(bytes.begin(), bytes.end());
    return v;
}

BitVector BitVector::from_uint(std::uint64_t value, std::size_t width)
{
    BitVector v(width);
    for (std::size_t j = 0; j < width && j < 64; ++j) {
        if ((value >> j) & 1u) {
            v.set(width - j, true);
        }
    }
    return v;
}

void BitVector::check_index(std::size_t index) const
{
    if (index < 1 || index > width_) {
        throw std::out_of_range("bit index " + std::to_string(index) +
                                " outside [1," + std::to_string(width_) + "]");
    }
}

bool BitVector::get(std::size_t index) const
{
    check_index(index);
    return (bytes_[(index - 1) >> 3] >> (7 - ((index - 1) & 7))) & 1u;
}

void BitVector::set(std::size_t index, bool value)
{
    check_index(index);
    const std::uint8_t mask = static_cast<std::uint8_t>(0x80u >> ((index - 1) & 7));
    if (value) {
        bytes_[(index - 1) >> 3] |= mask;
    } else {
        bytes_[(index - 1) >> 3] &= static_cast<std::uint8_t>(~mask);
    }
}

std::size_t BitVector::popcount() const noexcept
{
    std::size_t count = 0;
    for (const std::uint8_t b : bytes_) {
        count += static_cast<std::size_t>(std::popcount(b));
    }
    return count;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    require_same_width(*this, other);
    for (std::size_t i = 0; i < bytes_.size(); ++i) {
        bytes_[i] ^= other.bytes_[i];
    }
    return *this;
}

BitVector BitVector::complement() const
{
    BitVector out(width_);
    for (std::size_t i = 0; i < bytes_.size(); ++i) {
        out.bytes_[i] = static_cast<std::uint8_t>(~bytes_[i]);
    }
    out.bytes_.back() &= last_byte_mask(width_);
    return out;
}

std::string BitVector::to_bit_string() const
{
    std::string out(width_, '0');
    for (std::size_t i = 1; i <= width_; ++i) {
        if (get(i)) {
            out[i - 1] = '1';
        }
    }
    return out;
}

std::string BitVector::to_hex() const
{
    if (width_ % 4 != 0) {
        throw std::invalid_argument("hex rendering requires width divisible by 4");
    }
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(width_ / 4);
    for (std::size_t k = 0; k < width_ / 4; ++k) {
        const std::uint8_t byte = bytes_[k / 2];
        out.push_back(digits[(k % 2 == 0 ? byte >> 4 : byte) & 0xF]);
    }
    return out;
}

std::vector<std::uint8_t> BitVector::to_bytes() const
{
    if (width_ % 8 != 0) {
        throw std::invalid_argument("byte rendering requires width divisible by 8");
    }
    return bytes_;
}

void require_same_width(const BitVector& a, const BitVector& b)
{
    if (a.width() != b.width()) {
        throw std::invalid_argument("width mismatch: " + std::to_string(a.width()) +
                                    " vs " + std::to_string(b.width()));
    }
}

}  // namespace cihash
