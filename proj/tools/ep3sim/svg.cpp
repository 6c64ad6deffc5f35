#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "csv.hpp"
#include "ep3sim/errors.hpp"

namespace ep3sim::cli {

namespace {

constexpr double kW = 720.0, kH = 480.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

double tx(double v, double lo, double hi) {
    return kLeft + (v - lo) / (hi - lo) * (kW - kLeft - kRight);
}

double ty(double v, double lo, double hi) {
    return kH - kBottom - (v - lo) / (hi - lo) * (kH - kTop - kBottom);
}

}  // namespace

std::string render_line_plot(const PlotSpec& spec, const std::vector<Series>& series) {
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const auto& s : series) {
        for (size_t i = 0; i < s.x.size(); ++i) {
            double x = s.x[i], y = s.y[i];
            if (spec.log_x) {
                if (!(x > 0.0)) continue;
                x = std::log10(x);
            }
            if (spec.log_y) {
                if (!(y > 0.0)) continue;
                y = std::log10(y);
            }
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    }
    if (!(xlo < xhi)) {
        xhi = xlo + 1.0;
        xlo -= 1.0;
    }
    if (!(ylo < yhi)) {
        yhi = ylo + 1.0;
        ylo -= 1.0;
    }
    const double ypad = 0.05 * (yhi - ylo);
    ylo -= ypad;
    yhi += ypad;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)kW
        << "\" height=\"" << (int)kH << "\" viewBox=\"0 0 " << (int)kW << ' '
        << (int)kH << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << fmt_g(kLeft) << "\" y=\"" << fmt_g(kTop) << "\" width=\""
        << fmt_g(kW - kLeft - kRight) << "\" height=\"" << fmt_g(kH - kTop - kBottom)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt_g(kW / 2) << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" << spec.title << "</text>\n";
    svg << "<text x=\"" << fmt_g(kW / 2) << "\" y=\"" << fmt_g(kH - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << (spec.log_x ? "log10 " : "") << spec.x_label << "</text>\n";
    svg << "<text x=\"18\" y=\"" << fmt_g(kH / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " << fmt_g(kH / 2) << ")\">"
        << (spec.log_y ? "log10 " : "") << spec.y_label << "</text>\n";

    // corner tick labels
    svg << "<text x=\"" << fmt_g(kLeft) << "\" y=\"" << fmt_g(kH - kBottom + 16)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_g(xlo) << "</text>\n";
    svg << "<text x=\"" << fmt_g(kW - kRight) << "\" y=\"" << fmt_g(kH - kBottom + 16)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt_g(xhi) << "</text>\n";
    svg << "<text x=\"" << fmt_g(kLeft - 6) << "\" y=\"" << fmt_g(kH - kBottom)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt_g(ylo + ypad) << "</text>\n";
    svg << "<text x=\"" << fmt_g(kLeft - 6) << "\" y=\"" << fmt_g(kTop + 10)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt_g(yhi - ypad) << "</text>\n";

    int color = 0;
    for (const auto& s : series) {
        std::ostringstream pts;
        bool pen_up = true;
        for (size_t i = 0; i < s.x.size(); ++i) {
            double x = s.x[i], y = s.y[i];
            if (spec.log_x) {
                if (!(x > 0.0)) {
                    pen_up = true;
                    continue;
                }
                x = std::log10(x);
            }
            if (spec.log_y) {
                if (!(y > 0.0)) {
                    pen_up = true;
                    continue;
                }
                y = std::log10(y);
            }
            pts << (pen_up ? 'M' : 'L') << fmt_g(tx(x, xlo, xhi)) << ' '
                << fmt_g(ty(y, ylo, yhi));
            pen_up = false;
        }
        const char* col = kPalette[color % 6];
        svg << "<path d=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << col
            << "\" stroke-width=\"1.5\"/>\n";
        if (!s.label.empty()) {
            svg << "<text x=\"" << fmt_g(kW - kRight - 8) << "\" y=\""
                << fmt_g(kTop + 16 + 16 * color)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
                   "font-size=\"12\" fill=\"" << col << "\">" << s.label
                << "</text>\n";
        }
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

void save_plot(const std::string& path, const PlotSpec& spec,
               const std::vector<Series>& series) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write plot file: " + path);
    f << render_line_plot(spec, series);
}

}  // namespace ep3sim::cli
