#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cihash/eval.hpp"

namespace cihash {

enum class ReportFormat { text, csv, json };

std::optional<ReportFormat> parse_format(std::string_view name);

/// Identifies the run a report describes.
struct RunLabel {
    std::string hash_type;
    std::uint64_t k2 = 0;
    bool baseline = false;
};

/// Text and CSV round to 3 decimals; JSON keeps full precision and carries the
/// raw per-trial values.
std::string render_diffusion(const DiffusionStats& stats, const RunLabel& label,
                             ReportFormat format);
std::string render_collision(const CollisionStats& stats, const RunLabel& label,
                             ReportFormat format);

/// Per-trial changed-bit counts as CSV, for external plotting.
std::string render_b_values_csv(const DiffusionStats& stats);

std::string render_distribution(const DistributionDump& dump, ReportFormat format);

}  // namespace cihash
