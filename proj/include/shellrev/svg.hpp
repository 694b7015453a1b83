#pragma once

#include <optional>
#include <string>
#include <vector>

namespace shellrev {

/// One polyline; points with y = nullopt break the line (singular rows).
struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, std::optional<double>>> points;
};

struct SvgChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
    int width = 800;
    int height = 600;
};

/// Minimal static line chart, deterministic output.
std::string render_line_chart(const SvgChart& chart);

}  // namespace shellrev
