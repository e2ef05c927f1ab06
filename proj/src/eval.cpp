#include "cihash/eval.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cihash {

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    if (bound == 0) {
        throw std::invalid_argument("bound must be at least 1");
    }
    // Reject draws past the largest multiple of bound to avoid modulo bias.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t cutoff = max - max % bound;
    std::uint64_t v = next();
    while (v >= cutoff) {
        v = next();
    }
    return v % bound;
}

std::vector<std::uint8_t> flip_bit(std::span<const std::uint8_t> message,
                                   std::size_t position)
{
    if (position >= message.size() * 8) {
        throw std::out_of_range("flip position " + std::to_string(position) +
                                " beyond message of " + std::to_string(message.size() * 8) +
                                " bits");
    }
    std::vector<std::uint8_t> copy(message.begin(), message.end());
    copy[position / 8] ^= static_cast<std::uint8_t>(0x80u >> (position % 8));
    return copy;
}

std::vector<std::size_t> trial_positions(std::uint64_t eval_seed, std::size_t bit_domain,
                                         std::size_t trials)
{
    if (bit_domain == 0) {
        throw std::invalid_argument("flip-position domain is empty");
    }
    SplitMix64 rng(eval_seed);
    std::vector<std::size_t> positions(trials);
    for (std::size_t& p : positions) {
        p = static_cast<std::size_t>(rng.below(bit_domain));
    }
    return positions;
}

BitVector evaluate_digest(const TrialConfig& cfg, std::span<const std::uint8_t> message)
{
    if (cfg.baseline) {
        return BitVector::from_bytes(digest::compute(cfg.digest, message));
    }
    return keyed_hash(cfg.key, message, cfg.digest, cfg.generator);
}

DiffusionStats compute_diffusion_stats(std::vector<std::uint32_t> b_values,
                                       std::size_t digest_bits)
{
    if (b_values.size() < 2) {
        throw std::invalid_argument("diffusion statistics need at least two trials");
    }
    if (digest_bits == 0) {
        throw std::invalid_argument("digest length must be positive");
    }

    const double n = static_cast<double>(b_values.size());
    const double length = static_cast<double>(digest_bits);

    double sum = 0.0;
    for (const std::uint32_t b : b_values) {
        sum += b;
    }
    const double b_mean = sum / n;

    double b_sq = 0.0;
    double p_sq = 0.0;
    for (const std::uint32_t b : b_values) {
        const double db = static_cast<double>(b) - b_mean;
        b_sq += db * db;
        const double dp = static_cast<double>(b) / length - b_mean / length;
        p_sq += dp * dp;
    }

    DiffusionStats stats;
    stats.b_values = std::move(b_values);
    stats.digest_bits = digest_bits;
    stats.b_mean = b_mean;
    stats.p_mean = 100.0 * b_mean / length;
    stats.b_std = std::sqrt(b_sq / (n - 1.0));
    stats.p_std = 100.0 * std::sqrt(p_sq / (n - 1.0));
    return stats;
}

DiffusionStats diffusion_test(const TrialConfig& cfg)
{
    if (cfg.trials < 2) {
        throw std::invalid_argument("diffusion test needs at least two trials");
    }
    if (cfg.message.empty()) {
        throw std::invalid_argument("diffusion test needs a non-empty message");
    }

    const BitVector original = evaluate_digest(cfg, cfg.message);
    const std::vector<std::size_t> positions =
        trial_positions(cfg.eval_seed, cfg.message.size() * 8, cfg.trials);

    std::vector<std::uint32_t> b_values;
    b_values.reserve(cfg.trials);
    for (const std::size_t position : positions) {
        const BitVector changed = evaluate_digest(cfg, flip_bit(cfg.message, position));
        b_values.push_back(static_cast<std::uint32_t>(hamming_distance(original, changed)));
    }
    return compute_diffusion_stats(std::move(b_values), original.width());
}

ByteComparison compare_digest_bytes(std::span<const std::uint8_t> a,
                                    std::span<const std::uint8_t> b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("digest byte strings differ in length");
    }
    ByteComparison cmp;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) {
            ++cmp.hits;
        }
        cmp.abs_distance += static_cast<std::uint64_t>(
            a[i] > b[i] ? a[i] - b[i] : b[i] - a[i]);
    }
    return cmp;
}

CollisionStats collision_test(const TrialConfig& cfg)
{
    if (cfg.trials < 1) {
        throw std::invalid_argument("collision test needs at least one trial");
    }
    if (cfg.message.empty()) {
        throw std::invalid_argument("collision test needs a non-empty message");
    }

    const std::vector<std::uint8_t> original =
        evaluate_digest(cfg, cfg.message).to_bytes();
    const std::vector<std::size_t> positions =
        trial_positions(cfg.eval_seed, cfg.message.size() * 8, cfg.trials);

    CollisionStats stats;
    stats.trials = cfg.trials;
    stats.chars_per_digest = original.size();
    stats.hits_histogram.assign(original.size() + 1, 0);
    for (const std::size_t position : positions) {
        const std::vector<std::uint8_t> changed =
            evaluate_digest(cfg, flip_bit(cfg.message, position)).to_bytes();
        const ByteComparison cmp = compare_digest_bytes(original, changed);
        ++stats.hits_histogram[cmp.hits];
        stats.d_sum += cmp.abs_distance;
    }
    stats.d_per_char = static_cast<double>(stats.d_sum) /
                       (static_cast<double>(stats.trials) *
                        static_cast<double>(stats.chars_per_digest));
    return stats;
}

DistributionDump distribution_dump(std::span<const std::uint8_t> message,
                                   const BitVector& digest_value)
{
    DistributionDump dump;
    dump.message_bytes.assign(message.begin(), message.end());
    const std::string hex = digest_value.to_hex();
    dump.digest_nibbles.reserve(hex.size());
    for (const char c : hex) {
        dump.digest_nibbles.push_back(
            static_cast<std::uint8_t>(c <= '9' ? c - '0' : c - 'A' + 10));
    }
    dump.digest_bits = digest_value.to_bit_string();
    return dump;
}

}  // namespace cihash
