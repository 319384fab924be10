#pragma once

#include <string>
#include <vector>

namespace conekit::cli {

struct PlotPoint {
    double x;
    double y;
};

// 800x600 line plot with linear axes and ticks; no external dependencies.
std::string render_svg(const std::vector<PlotPoint>& points, const std::string& caption,
                       const std::string& x_label, const std::string& y_label);

}  // namespace conekit::cli
