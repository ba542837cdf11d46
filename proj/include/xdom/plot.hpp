#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "xdom/metrics.hpp"

namespace xdom::plot {

/// Overlaid ID / OOD histogram as a standalone SVG; both histograms must share edges.
std::string histogram_svg(const metrics::Histogram& id, const metrics::Histogram& ood, const std::string& title,
                          const std::string& x_label);

/// Fixed-width text table: split x scorer x {semantic, DOM, fused, K-class baseline}.
std::string summary_table(const metrics::EvalReport& report);
std::string summary_svg(const metrics::EvalReport& report);

/// <split>_<S_h|S_d>.svg per histogram pair, histograms.json (the plotted counts),
/// summary.txt and summary.svg. Returns the written paths.
std::vector<std::filesystem::path> write_plots(const metrics::EvalReport& report, const std::filesystem::path& dir);

}  // namespace xdom::plot
