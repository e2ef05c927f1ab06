#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cihash/bitvector.hpp"
#include "cihash/digests.hpp"
#include "cihash/keyed_hash.hpp"

namespace cihash {

/// Deterministic 64-bit mixer used for trial positions, kept independent of
/// the CIPRNG machinery under test.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) without modulo bias; bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// One evaluation run: which hash to drive, on what message, how many trials.
/// With `baseline` set the raw standard digest is evaluated instead of the
/// keyed hash, using the same trial positions for paired comparison.
struct TrialConfig {
    std::size_t trials = 1000;
    std::uint64_t eval_seed = 1;
    HashKey key{};
    digest::Algorithm digest = digest::Algorithm::md5;
    GeneratorKind generator = GeneratorKind::bbs;
    std::vector<std::uint8_t> message;
    bool baseline = false;
};

struct DiffusionStats {
    std::vector<std::uint32_t> b_values;  // per-trial changed-bit counts
    double b_mean = 0.0;
    double p_mean = 0.0;  // percent
    double b_std = 0.0;
    double p_std = 0.0;  // percent
    std::size_t digest_bits = 0;
};

struct CollisionStats {
    std::vector<std::uint64_t> hits_histogram;  // index = equal-byte count, 0..N/8
    std::uint64_t d_sum = 0;
    double d_per_char = 0.0;
    std::size_t trials = 0;
    std::size_t chars_per_digest = 0;
};

/// Copy of the message with exactly the addressed bit inverted. Position 0 is
/// the most significant bit of the first byte.
std::vector<std::uint8_t> flip_bit(std::span<const std::uint8_t> message,
                                   std::size_t position);

/// The flip positions a run with this seed will use, in trial order. Both
/// diffusion and collision tests draw from this stream, so baseline and keyed
/// runs with equal seeds are paired.
std::vector<std::size_t> trial_positions(std::uint64_t eval_seed, std::size_t bit_domain,
                                         std::size_t trials);

/// The digest a trial config evaluates: keyed hash, or the raw standard
/// digest in baseline mode.
BitVector evaluate_digest(const TrialConfig& cfg, std::span<const std::uint8_t> message);

/// Aggregate a list of changed-bit counts into the diffusion statistics:
/// B_mean, P = 100 B_mean / L, and the sample standard deviations of B and B/L.
DiffusionStats compute_diffusion_stats(std::vector<std::uint32_t> b_values,
                                       std::size_t digest_bits);

DiffusionStats diffusion_test(const TrialConfig& cfg);

/// Equal-byte count and summed absolute byte difference of two equal-length
/// byte strings.
struct ByteComparison {
    std::size_t hits = 0;
    std::uint64_t abs_distance = 0;
};
ByteComparison compare_digest_bytes(std::span<const std::uint8_t> a,
                                    std::span<const std::uint8_t> b);

CollisionStats collision_test(const TrialConfig& cfg);

/// Index/value record sets for plotting: message bytes, digest hex nibbles,
/// and the digest's raw bit string.
struct DistributionDump {
    std::vector<std::uint8_t> message_bytes;
    std::vector<std::uint8_t> digest_nibbles;
    std::string digest_bits;
};

DistributionDump distribution_dump(std::span<const std::uint8_t> message,
                                   const BitVector& digest_value);

}  // namespace cihash
