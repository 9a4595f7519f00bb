#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "npqaoa/bench.hpp"
#include "npqaoa/errors.hpp"

namespace npqaoa {

enum class PlotMetric { RMinus1, WallTime };

inline std::string_view metric_name(PlotMetric metric) {
    return metric == PlotMetric::RMinus1 ? "r_minus_1" : "wall_time";
}

inline std::optional<PlotMetric> metric_from_name(std::string_view name) {
    if (name == "r_minus_1") return PlotMetric::RMinus1;
    if (name == "wall_time") return PlotMetric::WallTime;
    return std::nullopt;
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

inline std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return std::string(buf);
}

}  // namespace detail

// Grouped bar chart: one group per problem size, one bar per optimizer,
// linear y axis, value labels over the bars. Self-contained SVG with no
// external assets; every bar is a <rect class="bar">.
inline std::string render_plot_svg(const std::vector<SummaryRow>& summary,
                                   PlotMetric metric) {
    if (summary.empty()) {
        throw std::invalid_argument("plot: empty summary");
    }
    std::vector<std::string> optimizers;
    std::vector<std::size_t> sizes;
    for (const SummaryRow& row : summary) {
        if (std::find(optimizers.begin(), optimizers.end(), row.optimizer) ==
            optimizers.end()) {
            optimizers.push_back(row.optimizer);
        }
        if (std::find(sizes.begin(), sizes.end(), row.n) == sizes.end()) {
            sizes.push_back(row.n);
        }
    }
    std::sort(sizes.begin(), sizes.end());

    auto value_of = [&](const std::string& opt, std::size_t n) {
        for (const SummaryRow& row : summary) {
            if (row.optimizer == opt && row.n == n) {
                return metric == PlotMetric::RMinus1 ? row.mean_r_minus_1
                                                     : row.mean_wall_time_s;
            }
        }
        return 0.0;
    };

    double y_max = 0.0;
    for (const std::string& opt : optimizers) {
        for (std::size_t n : sizes) {
            y_max = std::max(y_max, value_of(opt, n));
        }
    }
    if (y_max <= 0.0) y_max = 1.0;
    y_max *= 1.12;  // headroom for value labels

    static constexpr const char* kPalette[] = {"#4C72B0", "#DD8452", "#55A868",
                                               "#C44E52", "#8172B3", "#937860",
                                               "#DA8BC3", "#8C8C8C"};
    const std::size_t palette_size = sizeof(kPalette) / sizeof(kPalette[0]);

    const double bar_w = 30.0;
    const double bar_gap = 4.0;
    const double group_gap = 36.0;
    const double group_w =
        static_cast<double>(optimizers.size()) * (bar_w + bar_gap) + group_gap;
    const double left = 76.0, top = 48.0, bottom = 56.0;
    const double plot_h = 320.0;
    const double plot_w = group_w * static_cast<double>(sizes.size());
    const double legend_w = 150.0;
    const double width = left + plot_w + legend_w;
    const double height = top + plot_h + bottom;

    const std::string title =
        metric == PlotMetric::RMinus1
            ? "Mean R-1 by optimizer and problem size"
            : "Mean wall time [s] by optimizer and problem size";

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<title>" << detail::xml_escape(title) << "</title>\n"
        << "<text x=\"" << left + plot_w / 2 << "\" y=\"22\" text-anchor=\"middle\" "
           "font-size=\"15\">"
        << detail::xml_escape(title) << "</text>\n";

    // axes and horizontal gridlines with tick labels
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
        << "\" y2=\"" << top + plot_h << "\" stroke=\"#333\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\""
        << left + plot_w << "\" y2=\"" << top + plot_h << "\" stroke=\"#333\"/>\n";
    for (int tick = 0; tick <= 5; ++tick) {
        const double frac = static_cast<double>(tick) / 5.0;
        const double y = top + plot_h * (1.0 - frac);
        svg << "<line x1=\"" << left - 4 << "\" y1=\"" << y << "\" x2=\""
            << left + plot_w << "\" y2=\"" << y
            << "\" stroke=\"#ccc\" stroke-width=\"0.5\"/>\n"
            << "<text x=\"" << left - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\">" << detail::short_number(y_max * frac)
            << "</text>\n";
    }

    for (std::size_t g = 0; g < sizes.size(); ++g) {
        const double group_x = left + static_cast<double>(g) * group_w + group_gap / 2;
        for (std::size_t o = 0; o < optimizers.size(); ++o) {
            const double v = value_of(optimizers[o], sizes[g]);
            const double h = plot_h * v / y_max;
            const double x = group_x + static_cast<double>(o) * (bar_w + bar_gap);
            const double y = top + plot_h - h;
            svg << "<rect class=\"bar\" x=\"" << x << "\" y=\"" << y << "\" width=\""
                << bar_w << "\" height=\"" << h << "\" fill=\""
                << kPalette[o % palette_size] << "\"/>\n"
                << "<text x=\"" << x + bar_w / 2 << "\" y=\"" << y - 4
                << "\" text-anchor=\"middle\" font-size=\"10\">"
                << detail::short_number(v) << "</text>\n";
        }
        svg << "<text x=\"" << group_x +
                   (static_cast<double>(optimizers.size()) * (bar_w + bar_gap) -
                    bar_gap) / 2
            << "\" y=\"" << top + plot_h + 22 << "\" text-anchor=\"middle\">n="
            << sizes[g] << "</text>\n";
    }

    for (std::size_t o = 0; o < optimizers.size(); ++o) {
        const double x = left + plot_w + 18;
        const double y = top + 10 + static_cast<double>(o) * 22;
        svg << "<rect x=\"" << x << "\" y=\"" << y - 10 << "\" width=\"13\" height=\""
            << 13 << "\" fill=\"" << kPalette[o % palette_size] << "\"/>\n"
            << "<text x=\"" << x + 19 << "\" y=\"" << y + 1 << "\">"
            << detail::xml_escape(optimizers[o]) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

inline void emit_plot(const std::vector<SummaryRow>& summary, PlotMetric metric,
                      const std::string& path) {
    const std::string svg = render_plot_svg(summary, metric);
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << svg;
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace npqaoa
