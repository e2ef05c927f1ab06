#include "cihash/digests.hpp"

#include <stdexcept>

namespace cihash::digest {

std::size_t output_bits(Algorithm alg)
{
    switch (alg) {
        case Algorithm::md5: return 128;
        case Algorithm::sha1: return 160;
        case Algorithm::sha224: return 224;
        case Algorithm::sha256: return 256;
        case Algorithm::sha384: return 384;
        case Algorithm::sha512: return 512;
    }
    throw std::invalid_argument("unknown digest algorithm");
}

std::string_view name(Algorithm alg)
{
    switch (alg) {
        case Algorithm::md5: return "md5";
        case Algorithm::sha1: return "sha1";
        case Algorithm::sha224: return "sha224";
        case Algorithm::sha256: return "sha256";
        case Algorithm::sha384: return "sha384";
        case Algorithm::sha512: return "sha512";
    }
    throw std::invalid_argument("unknown digest algorithm");
}

std::optional<Algorithm> parse(std::string_view name)
{
    for (const Algorithm alg : all_algorithms) {
        if (name == digest::name(alg)) {
            return alg;
        }
    }
    return std::nullopt;
}

std::vector<std::uint8_t> compute(Algorithm alg, std::span<const std::uint8_t> data)
{
    switch (alg) {
        case Algorithm::md5: {
            const auto d = md5(data);
            return {d.begin(), d.end()};
        }
        case Algorithm::sha1: {
            const auto d = sha1(data);
            return {d.begin(), d.end()};
        }
        case Algorithm::sha224: {
            const auto d = sha224(data);
            return {d.begin(), d.end()};
        }
        case Algorithm::sha256: {
            const auto d = sha256(data);
            return {d.begin(), d.end()};
        }
        case Algorithm::sha384: {
            const auto d = sha384(data);
            return {d.begin(), d.end()};
        }
        case Algorithm::sha512: {
            const auto d = sha512(data);
            return {d.begin(), d.end()};
        }
    }
    throw std::invalid_argument("unknown digest algorithm");
}

}  // namespace cihash::digest
