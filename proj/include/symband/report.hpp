#pragma once

#include <string>
#include <vector>

#include "symband/bench.hpp"

namespace symband {

struct AlphaRow {
    Algorithm algorithm = Algorithm::STDM;
    StorageKind storage = StorageKind::Fixed;
    Backend backend = Backend::Exact;
    AlphaEstimate estimate;
};

struct ReportBundle {
    std::vector<MeanRow> means;
    std::vector<AlphaRow> alphas;
    std::vector<RatioRow> ratios;
};

/// One estimate per (algorithm, storage, backend) from the two largest sizes
/// of the series, using mean times. Throws InsufficientData when a series has
/// fewer than two sizes.
std::vector<AlphaRow> alpha_table(const std::vector<BenchRecord>& records);

std::string format_mean_table(const std::vector<MeanRow>& rows);
std::string format_alpha_table(const std::vector<AlphaRow>& rows);
std::string format_ratio_table(const std::vector<RatioRow>& rows);

/// Standalone SVG grouped bar chart: one panel per (storage, backend), one
/// group per n, one bar per algorithm, log-scaled bar heights.
std::string render_svg(const std::vector<MeanRow>& rows);

}  // namespace symband
