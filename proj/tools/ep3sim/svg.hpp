#pragma once

// Minimal deterministic SVG line plots. Every figure is rendered from data
// that already lives in a CSV; the plot never computes anything new.

#include <string>
#include <vector>

namespace ep3sim::cli {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
};

std::string render_line_plot(const PlotSpec& spec, const std::vector<Series>& series);

void save_plot(const std::string& path, const PlotSpec& spec,
               const std::vector<Series>& series);

}  // namespace ep3sim::cli
