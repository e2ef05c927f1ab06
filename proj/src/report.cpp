#include "cihash/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cihash {

namespace {

std::string fixed3(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

std::uint64_t histogram_bucket(const CollisionStats& stats, std::size_t hits)
{
    return hits < stats.hits_histogram.size() ? stats.hits_histogram[hits] : 0;
}

std::uint64_t histogram_tail(const CollisionStats& stats, std::size_t from)
{
    std::uint64_t total = 0;
    for (std::size_t i = from; i < stats.hits_histogram.size(); ++i) {
        total += stats.hits_histogram[i];
    }
    return total;
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name)
{
    if (name == "text") return ReportFormat::text;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    return std::nullopt;
}

std::string render_diffusion(const DiffusionStats& stats, const RunLabel& label,
                             ReportFormat format)
{
    std::ostringstream out;
    switch (format) {
        case ReportFormat::text:
            out << "hash_type  k2  B_mean    P(%)      B_std    P_std(%)\n";
            out << label.hash_type << (label.baseline ? " (baseline)" : "") << "  "
                << label.k2 << "  " << fixed3(stats.b_mean) << "  " << fixed3(stats.p_mean)
                << "  " << fixed3(stats.b_std) << "  " << fixed3(stats.p_std) << "\n";
            break;
        case ReportFormat::csv:
            out << "hash_type,k2,B_mean,P,B_std,P_std\n";
            out << label.hash_type << ',' << label.k2 << ',' << fixed3(stats.b_mean) << ','
                << fixed3(stats.p_mean) << ',' << fixed3(stats.b_std) << ','
                << fixed3(stats.p_std) << "\n";
            break;
        case ReportFormat::json: {
            nlohmann::json doc;
            doc["hash_type"] = label.hash_type;
            doc["k2"] = label.k2;
            doc["baseline"] = label.baseline;
            doc["trials"] = stats.b_values.size();
            doc["digest_bits"] = stats.digest_bits;
            doc["b_mean"] = stats.b_mean;
            doc["p_mean"] = stats.p_mean;
            doc["b_std"] = stats.b_std;
            doc["p_std"] = stats.p_std;
            doc["b_values"] = stats.b_values;
            out << doc.dump() << "\n";
            break;
        }
    }
    return out.str();
}

std::string render_collision(const CollisionStats& stats, const RunLabel& label,
                             ReportFormat format)
{
    std::ostringstream out;
    switch (format) {
        case ReportFormat::text:
            out << "hash_type  hits(0,1,2,3,4)  hits>=5  sum_d  avg_d_per_char\n";
            out << label.hash_type << (label.baseline ? " (baseline)" : "") << "  ("
                << histogram_bucket(stats, 0) << ", " << histogram_bucket(stats, 1) << ", "
                << histogram_bucket(stats, 2) << ", " << histogram_bucket(stats, 3) << ", "
                << histogram_bucket(stats, 4) << ")  " << histogram_tail(stats, 5) << "  "
                << stats.d_sum << "  " << fixed3(stats.d_per_char) << "\n";
            break;
        case ReportFormat::csv:
            out << "hash_type,trials,hits0,hits1,hits2,hits3,hits4,hits_ge5,d_sum,"
                   "d_per_char\n";
            out << label.hash_type << ',' << stats.trials << ','
                << histogram_bucket(stats, 0) << ',' << histogram_bucket(stats, 1) << ','
                << histogram_bucket(stats, 2) << ',' << histogram_bucket(stats, 3) << ','
                << histogram_bucket(stats, 4) << ',' << histogram_tail(stats, 5) << ','
                << stats.d_sum << ',' << fixed3(stats.d_per_char) << "\n";
            break;
        case ReportFormat::json: {
            nlohmann::json doc;
            doc["hash_type"] = label.hash_type;
            doc["k2"] = label.k2;
            doc["baseline"] = label.baseline;
            doc["trials"] = stats.trials;
            doc["chars_per_digest"] = stats.chars_per_digest;
            doc["hits_histogram"] = stats.hits_histogram;
            doc["d_sum"] = stats.d_sum;
            doc["d_per_char"] = stats.d_per_char;
            out << doc.dump() << "\n";
            break;
        }
    }
    return out.str();
}

std::string render_b_values_csv(const DiffusionStats& stats)
{
    std::ostringstream out;
    out << "trial,changed_bits\n";
    for (std::size_t i = 0; i < stats.b_values.size(); ++i) {
        out << (i + 1) << ',' << stats.b_values[i] << "\n";
    }
    return out.str();
}

std::string render_distribution(const DistributionDump& dump, ReportFormat format)
{
    std::ostringstream out;
    switch (format) {
        case ReportFormat::text:
            out << "message bytes (index value):\n";
            for (std::size_t i = 0; i < dump.message_bytes.size(); ++i) {
                out << (i + 1) << ' ' << static_cast<unsigned>(dump.message_bytes[i]) << "\n";
            }
            out << "digest nibbles (index value):\n";
            for (std::size_t i = 0; i < dump.digest_nibbles.size(); ++i) {
                out << (i + 1) << ' ' << static_cast<unsigned>(dump.digest_nibbles[i])
                    << "\n";
            }
            out << "digest bits: " << dump.digest_bits << "\n";
            break;
        case ReportFormat::csv:
            out << "series,index,value\n";
            for (std::size_t i = 0; i < dump.message_bytes.size(); ++i) {
                out << "message_byte," << (i + 1) << ','
                    << static_cast<unsigned>(dump.message_bytes[i]) << "\n";
            }
            for (std::size_t i = 0; i < dump.digest_nibbles.size(); ++i) {
                out << "digest_nibble," << (i + 1) << ','
                    << static_cast<unsigned>(dump.digest_nibbles[i]) << "\n";
            }
            for (std::size_t i = 0; i < dump.digest_bits.size(); ++i) {
                out << "digest_bit," << (i + 1) << ',' << dump.digest_bits[i] << "\n";
            }
            break;
        case ReportFormat::json: {
            nlohmann::json doc;
            doc["message_bytes"] = dump.message_bytes;
            doc["digest_nibbles"] = dump.digest_nibbles;
            doc["digest_bits"] = dump.digest_bits;
            out << doc.dump() << "\n";
            break;
        }
    }
    return out.str();
}

}  // namespace cihash
