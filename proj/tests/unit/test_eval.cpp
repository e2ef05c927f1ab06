#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cihash/eval.hpp"
#include "test_util.hpp"

using namespace cihash;

namespace {

TrialConfig small_config()
{
    TrialConfig cfg;
    cfg.trials = 25;
    cfg.eval_seed = 99;
    const std::string text = "a deterministic evaluation message, long enough to flip";
    cfg.message.assign(text.begin(), text.end());
    return cfg;
}

}  // namespace

TEST_CASE("flip_bit inverts exactly one bit")
{
    const std::vector<std::uint8_t> zero{0x00};
    CHECK(flip_bit(zero, 0) == std::vector<std::uint8_t>{0x80});
    CHECK(flip_bit(zero, 7) == std::vector<std::uint8_t>{0x01});
    CHECK_THROWS_AS(flip_bit(zero, 8), std::out_of_range);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto message = cihash::test::random_bytes(rng, 1 + rng() % 50);
        const std::size_t position = rng() % (message.size() * 8);
        const auto flipped = flip_bit(message, position);
        CHECK(flip_bit(flipped, position) == message);  // involution
        std::size_t changed = 0;  // bit-count oracle
        for (std::size_t b = 0; b < message.size(); ++b) {
            changed += static_cast<std::size_t>(
                std::popcount(static_cast<unsigned>(message[b] ^ flipped[b])));
        }
        CHECK(changed == 1);
    }
}

TEST_CASE("splitmix below() stays in range and is deterministic")
{
    SplitMix64 a(5), b(5);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t v = a.below(37);
        CHECK(v < 37);
        CHECK(v == b.below(37));
    }
    CHECK_THROWS_AS(a.below(0), std::invalid_argument);
}

TEST_CASE("diffusion statistics on hand-built samples")
{
    SUBCASE("constant sample collapses the deviations")
    {
        const DiffusionStats s = compute_diffusion_stats(
            std::vector<std::uint32_t>(10, 64), 128);
        CHECK(s.b_mean == doctest::Approx(64.0));
        CHECK(s.p_mean == doctest::Approx(50.0));
        CHECK(s.b_std == doctest::Approx(0.0));
        CHECK(s.p_std == doctest::Approx(0.0));
    }
    SUBCASE("two-sample case {60, 68}")
    {
        const DiffusionStats s = compute_diffusion_stats({60, 68}, 128);
        CHECK(s.b_mean == doctest::Approx(64.0).epsilon(1e-12));
        CHECK(s.b_std == doctest::Approx(std::sqrt(32.0)).epsilon(1e-9));
        CHECK(s.p_std == doctest::Approx(100.0 * std::sqrt(32.0) / 128.0).epsilon(1e-9));
    }
    SUBCASE("p_std is b_std rescaled by the digest length")
    {
        std::mt19937_64 rng(32);
        std::vector<std::uint32_t> values;
        for (int i = 0; i < 500; ++i) {
            values.push_back(static_cast<std::uint32_t>(rng() % 129));
        }
        const DiffusionStats s = compute_diffusion_stats(values, 128);
        CHECK(s.p_std == doctest::Approx(100.0 * s.b_std / 128.0).epsilon(1e-12));
        CHECK(s.p_mean == doctest::Approx(100.0 * s.b_mean / 128.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(compute_diffusion_stats({64}, 128), std::invalid_argument);
}

TEST_CASE("diffusion test is reproducible and bounded")
{
    const TrialConfig cfg = small_config();
    const DiffusionStats a = diffusion_test(cfg);
    const DiffusionStats b = diffusion_test(cfg);
    CHECK(a.b_values == b.b_values);
    CHECK(a.b_mean == b.b_mean);
    CHECK(a.digest_bits == 128);
    REQUIRE(a.b_values.size() == cfg.trials);
    for (const std::uint32_t v : a.b_values) {
        CHECK(v <= 128);
    }
    CHECK(a.p_mean >= 0.0);
    CHECK(a.p_mean <= 100.0);
}

TEST_CASE("baseline and keyed runs share the flip positions")
{
    // positions depend only on (eval_seed, message length, trials)
    const TrialConfig cfg = small_config();
    const auto keyed = trial_positions(cfg.eval_seed, cfg.message.size() * 8, cfg.trials);
    TrialConfig base = cfg;
    base.baseline = true;
    const auto baseline = trial_positions(base.eval_seed, base.message.size() * 8, base.trials);
    CHECK(keyed == baseline);

    // and baseline mode really evaluates the raw digest
    const BitVector raw = evaluate_digest(base, base.message);
    CHECK(raw == BitVector::from_bytes(digest::compute(base.digest, base.message)));
    const BitVector keyed_digest = evaluate_digest(cfg, cfg.message);
    CHECK(keyed_digest ==
          keyed_hash(cfg.key, cfg.message, cfg.digest, cfg.generator));
}

TEST_CASE("byte comparison kernel covers the stubbed collision cases")
{
    const std::vector<std::uint8_t> same(16, 0xAB);
    const ByteComparison equal = compare_digest_bytes(same, same);
    CHECK(equal.hits == 16);
    CHECK(equal.abs_distance == 0);

    const std::vector<std::uint8_t> lo{0x00};
    const std::vector<std::uint8_t> hi{0xFF};
    const ByteComparison far = compare_digest_bytes(lo, hi);
    CHECK(far.hits == 0);
    CHECK(far.abs_distance == 255);

    CHECK_THROWS_AS(compare_digest_bytes(lo, same), std::invalid_argument);
}

TEST_CASE("collision test aggregates recomputable sums")
{
    TrialConfig cfg = small_config();
    cfg.trials = 40;
    const CollisionStats stats = collision_test(cfg);

    CHECK(stats.chars_per_digest == 16);
    std::uint64_t histogram_total = 0;
    for (const std::uint64_t count : stats.hits_histogram) {
        histogram_total += count;
    }
    CHECK(histogram_total == cfg.trials);

    // independent accumulation pass over the same trials
    const auto original = evaluate_digest(cfg, cfg.message).to_bytes();
    const auto positions = trial_positions(cfg.eval_seed, cfg.message.size() * 8, cfg.trials);
    std::uint64_t d_sum = 0;
    for (const std::size_t p : positions) {
        const auto changed = evaluate_digest(cfg, flip_bit(cfg.message, p)).to_bytes();
        for (std::size_t i = 0; i < changed.size(); ++i) {
            d_sum += static_cast<std::uint64_t>(
                original[i] > changed[i] ? original[i] - changed[i]
                                         : changed[i] - original[i]);
        }
    }
    CHECK(stats.d_sum == d_sum);
    CHECK(stats.d_per_char ==
          doctest::Approx(static_cast<double>(d_sum) / (40.0 * 16.0)).epsilon(1e-12));

    CHECK(collision_test(cfg).d_sum == stats.d_sum);  // reproducible
}

TEST_CASE("distribution dump records")
{
    const std::vector<std::uint8_t> message{'A', 'B'};
    const DistributionDump dump = distribution_dump(message, BitVector::from_hex("F0"));
    CHECK(dump.message_bytes == std::vector<std::uint8_t>{65, 66});
    CHECK(dump.digest_nibbles == std::vector<std::uint8_t>{15, 0});
    CHECK(dump.digest_bits == "11110000");

    const DistributionDump wide =
        distribution_dump(message, BitVector(128));
    CHECK(wide.digest_nibbles.size() == 128 / 4);
}
