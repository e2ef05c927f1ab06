#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cihash::digest {

enum class Algorithm { md5, sha1, sha224, sha256, sha384, sha512 };

inline constexpr Algorithm all_algorithms[] = {
    Algorithm::md5,    Algorithm::sha1,   Algorithm::sha224,
    Algorithm::sha256, Algorithm::sha384, Algorithm::sha512,
};

std::size_t output_bits(Algorithm alg);
std::string_view name(Algorithm alg);
std::optional<Algorithm> parse(std::string_view name);

/// One-shot digest of a whole message.
std::vector<std::uint8_t> compute(Algorithm alg, std::span<const std::uint8_t> data);

std::array<std::uint8_t, 16> md5(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 20> sha1(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 28> sha224(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 48> sha384(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 64> sha512(std::span<const std::uint8_t> data);

}  // namespace cihash::digest
