// Command-line front end: hashing, stream inspection, distance computation,
// and the diffusion/collision evaluation harness.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cihash/ciprng.hpp"
#include "cihash/eval.hpp"
#include "cihash/keyed_hash.hpp"
#include "cihash/report.hpp"

namespace {

using namespace cihash;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct Options {
    std::uint64_t k1 = 50;
    std::uint64_t k2 = 2;
    std::uint64_t k3 = 50;
    std::string digest = "md5";
    std::string prng = "bbs";
    std::string input = "-";
    std::size_t trials = 0;  // subcommand-specific default applied at setup
    std::uint64_t eval_seed = 1;
    std::string format = "text";
    bool baseline = false;
    std::string out;

    std::size_t count = 1;
    std::size_t width = 32;
    bool raw = false;

    std::string state_a, state_b, strategy_a, strategy_b;
    std::size_t terms = default_distance_terms;
};

std::vector<std::uint8_t> read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        const std::string data = buffer.str();
        return {data.begin(), data.end()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const std::string data = buffer.str();
    return {data.begin(), data.end()};
}

digest::Algorithm parse_digest_or_throw(const std::string& name)
{
    const auto alg = digest::parse(name);
    if (!alg) {
        throw CLI::ValidationError("--digest", "unknown digest '" + name + "'");
    }
    return *alg;
}

GeneratorKind parse_prng_or_throw(const std::string& name)
{
    const auto kind = parse_generator(name);
    if (!kind) {
        throw CLI::ValidationError("--prng", "unknown generator '" + name + "'");
    }
    return *kind;
}

ReportFormat parse_format_or_throw(const std::string& name)
{
    const auto format = parse_format(name);
    if (!format) {
        throw CLI::ValidationError("--format", "unknown format '" + name + "'");
    }
    return *format;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    file << content;
    if (!file) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

TrialConfig make_trial_config(const Options& opt)
{
    TrialConfig cfg;
    cfg.trials = opt.trials;
    cfg.eval_seed = opt.eval_seed;
    cfg.key = HashKey{opt.k1, opt.k2, opt.k3};
    cfg.digest = parse_digest_or_throw(opt.digest);
    cfg.generator = parse_prng_or_throw(opt.prng);
    cfg.message = read_input(opt.input);
    cfg.baseline = opt.baseline;
    return cfg;
}

int cmd_hash(const Options& opt)
{
    const HashKey key{opt.k1, opt.k2, opt.k3};
    const BitVector value = keyed_hash(key, read_input(opt.input),
                                       parse_digest_or_throw(opt.digest),
                                       parse_prng_or_throw(opt.prng));
    std::cout << hexdigest(value) << "\n";
    return kExitOk;
}

int cmd_eval_diffusion(const Options& opt)
{
    const TrialConfig cfg = make_trial_config(opt);
    const DiffusionStats stats = diffusion_test(cfg);
    const RunLabel label{opt.digest, opt.k2, opt.baseline};
    std::cout << render_diffusion(stats, label, parse_format_or_throw(opt.format));
    if (!opt.out.empty()) {
        write_file(opt.out, render_b_values_csv(stats));
    }
    return kExitOk;
}

int cmd_eval_collision(const Options& opt)
{
    const TrialConfig cfg = make_trial_config(opt);
    const CollisionStats stats = collision_test(cfg);
    const RunLabel label{opt.digest, opt.k2, opt.baseline};
    std::cout << render_collision(stats, label, parse_format_or_throw(opt.format));
    return kExitOk;
}

int cmd_prng_stream(const Options& opt)
{
    if (opt.width % 4 != 0) {
        throw CLI::ValidationError("--width", "hex output needs a width divisible by 4");
    }
    const GeneratorSpec spec = GeneratorSpec::make(parse_prng_or_throw(opt.prng), opt.k1);
    if (opt.raw) {
        RawBitStream stream(spec);
        for (std::size_t i = 0; i < opt.count; ++i) {
            std::cout << stream.take_vector(opt.width).to_hex() << "\n";
        }
        return kExitOk;
    }
    CiprngStream stream(spec, opt.width);
    for (std::size_t i = 0; i < opt.count; ++i) {
        std::cout << stream.next().to_hex() << "\n";
    }
    return kExitOk;
}

BitVector read_state_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open state file '" + path + "'");
    }
    std::string line;
    std::getline(file, line);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
    }
    if (line.empty()) {
        throw std::runtime_error("state file '" + path + "' holds no bit string");
    }
    return BitVector::from_bits(line);
}

StrategySequence read_strategy_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open strategy file '" + path + "'");
    }
    std::vector<StrategySubset> terms;
    std::string line;
    while (std::getline(file, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        terms.push_back(StrategySubset::from_mask(BitVector::from_bits(line)));
    }
    if (terms.empty()) {
        throw std::runtime_error("strategy file '" + path + "' holds no terms");
    }
    const std::size_t width = terms.front().width();
    return StrategySequence(width, std::move(terms));
}

int cmd_distance(const Options& opt)
{
    const SystemPoint a(read_strategy_file(opt.strategy_a), read_state_file(opt.state_a));
    const SystemPoint b(read_strategy_file(opt.strategy_b), read_state_file(opt.state_b));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", point_distance(a, b, opt.terms));
    std::cout << buf << "\n";
    return kExitOk;
}

int cmd_distribution(const Options& opt)
{
    const std::vector<std::uint8_t> message = read_input(opt.input);
    const HashKey key{opt.k1, opt.k2, opt.k3};
    const BitVector value = keyed_hash(key, message, parse_digest_or_throw(opt.digest),
                                       parse_prng_or_throw(opt.prng));
    const std::string rendered =
        render_distribution(distribution_dump(message, value), parse_format_or_throw(opt.format));
    std::cout << rendered;
    if (!opt.out.empty()) {
        write_file(opt.out, rendered);
    }
    return kExitOk;
}

void add_key_options(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--k1", opt.k1, "key component k1 (generator seed)")
        ->capture_default_str();
    cmd->add_option("--k2", opt.k2, "key component k2 (strategy length)")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    cmd->add_option("--k3", opt.k3, "key component k3 (mixing vector)")
        ->capture_default_str();
    cmd->add_option("--digest", opt.digest, "inner digest")
        ->check(CLI::IsMember({"md5", "sha1", "sha224", "sha256", "sha384", "sha512"}))
        ->capture_default_str();
    cmd->add_option("--prng", opt.prng, "strategy generator")
        ->check(CLI::IsMember({"bbs", "lcg", "mt", "xorshift", "rc4", "lfsr"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"chaotic-iterations keyed hash tool"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* hash = app.add_subcommand("hash", "print the keyed hash of a message");
    add_key_options(hash, opt);
    hash->add_option("--input", opt.input, "input file, or - for standard input")
        ->capture_default_str();

    CLI::App* diffusion =
        app.add_subcommand("eval-diffusion", "one-bit-flip diffusion statistics");
    add_key_options(diffusion, opt);
    diffusion->add_option("--input", opt.input, "input file, or - for standard input")
        ->capture_default_str();
    diffusion->add_option("--trials", opt.trials, "number of one-bit-flip trials")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    diffusion->add_option("--eval-seed", opt.eval_seed, "seed of the flip-position RNG")
        ->capture_default_str();
    diffusion->add_option("--format", opt.format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    diffusion->add_flag("--baseline", opt.baseline,
                        "evaluate the raw standard digest instead of the keyed hash");
    diffusion->add_option("--out", opt.out, "also write per-trial changed-bit counts (CSV)");

    CLI::App* collision =
        app.add_subcommand("eval-collision", "byte-level collision statistics");
    add_key_options(collision, opt);
    collision->add_option("--input", opt.input, "input file, or - for standard input")
        ->capture_default_str();
    collision->add_option("--trials", opt.trials, "number of one-bit-flip trials")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    collision->add_option("--eval-seed", opt.eval_seed, "seed of the flip-position RNG")
        ->capture_default_str();
    collision->add_option("--format", opt.format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    collision->add_flag("--baseline", opt.baseline,
                        "evaluate the raw standard digest instead of the keyed hash");

    CLI::App* stream = app.add_subcommand("prng-stream", "dump generator output as hex");
    stream->add_option("--prng", opt.prng, "generator")
        ->check(CLI::IsMember({"bbs", "lcg", "mt", "xorshift", "rc4", "lfsr"}))
        ->capture_default_str();
    stream->add_option("--k1", opt.k1, "generator seed")->capture_default_str();
    stream->add_option("--count", opt.count, "number of vectors")->capture_default_str();
    stream->add_option("--width", opt.width, "bits per vector (multiple of 4)")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    stream->add_flag("--raw", opt.raw,
                     "dump raw generator bits instead of XOR-CIPRNG vectors");

    CLI::App* distance =
        app.add_subcommand("distance", "phase-space distance between two points");
    distance->add_option("--state-a", opt.state_a, "bit-string file, first state")
        ->required();
    distance->add_option("--state-b", opt.state_b, "bit-string file, second state")
        ->required();
    distance->add_option("--strategy-a", opt.strategy_a,
                         "strategy file, one mask bit string per line")
        ->required();
    distance->add_option("--strategy-b", opt.strategy_b,
                         "strategy file, one mask bit string per line")
        ->required();
    distance->add_option("--terms", opt.terms, "series truncation depth")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();

    CLI::App* distribution =
        app.add_subcommand("distribution", "message/digest distribution records");
    add_key_options(distribution, opt);
    distribution->add_option("--input", opt.input, "input file, or - for standard input")
        ->capture_default_str();
    distribution->add_option("--format", opt.format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    distribution->add_option("--out", opt.out, "also write the records to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*hash) return cmd_hash(opt);
        if (*diffusion) {
            if (opt.trials == 0) opt.trials = 1000;
            return cmd_eval_diffusion(opt);
        }
        if (*collision) {
            if (opt.trials == 0) opt.trials = 2048;
            return cmd_eval_collision(opt);
        }
        if (*stream) return cmd_prng_stream(opt);
        if (*distance) return cmd_distance(opt);
        if (*distribution) return cmd_distribution(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
