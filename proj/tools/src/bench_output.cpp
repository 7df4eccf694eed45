#include "bench_output.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

namespace redsim::cli {

std::string bench_json(const std::vector<BenchRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BenchRecord& r : records) {
        arr.push_back({{"engine", r.engine},
                       {"model", r.model},
                       {"node_count", r.node_count},
                       {"beta", r.beta},
                       {"total_steps", r.total_steps},
                       {"successful_steps", r.successful_steps},
                       {"rejected_steps", r.rejected_steps},
                       {"ns_per_successful_step", r.ns_per_successful_step}});
    }
    return arr.dump(2) + "\n";
}

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 640.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 420.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string pow10_label(int exponent) {
    std::ostringstream os;
    os << "1e" << exponent;
    return os.str();
}

} // namespace

std::string bench_svg(const std::vector<BenchRecord>& records) {
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
    for (const BenchRecord& r : records) {
        if (r.node_count == 0 || !(r.ns_per_successful_step > 0.0))
            continue;
        const double x = std::log10(static_cast<double>(r.node_count));
        const double y = std::log10(r.ns_per_successful_step);
        series[r.engine].emplace_back(x, y);
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
    }
    if (series.empty()) {
        x_lo = y_lo = 0.0;
        x_hi = y_hi = 1.0;
    }
    if (x_hi - x_lo < 0.5) {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    if (y_hi - y_lo < 0.5) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    // A little margin so points stay off the frame.
    x_lo -= 0.05 * (x_hi - x_lo);
    x_hi += 0.05 * (x_hi - x_lo);
    y_lo -= 0.08 * (y_hi - y_lo);
    y_hi += 0.08 * (y_hi - y_lo);

    const auto px = [&](double x) {
        return kLeft + (x - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
    };
    const auto py = [&](double y) {
        return kBottom - (y - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
        << kRight - kLeft << "\" height=\"" << kBottom - kTop
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    // Decade gridlines and tick labels.
    for (int e = static_cast<int>(std::ceil(x_lo)); e <= std::floor(x_hi); ++e) {
        const double x = px(e);
        svg << "<line x1=\"" << x << "\" y1=\"" << kTop << "\" x2=\"" << x
            << "\" y2=\"" << kBottom << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << kBottom + 18
            << "\" font-size=\"12\" text-anchor=\"middle\">" << pow10_label(e)
            << "</text>\n";
    }
    for (int e = static_cast<int>(std::ceil(y_lo)); e <= std::floor(y_hi); ++e) {
        const double y = py(e);
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kRight
            << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << pow10_label(e)
            << "</text>\n";
    }
    svg << "<text x=\"" << 0.5 * (kLeft + kRight) << "\" y=\"" << kBottom + 38
        << "\" font-size=\"13\" text-anchor=\"middle\">network size (nodes)"
        << "</text>\n";
    svg << "<text x=\"18\" y=\"" << 0.5 * (kTop + kBottom)
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << 0.5 * (kTop + kBottom) << ")\">ns per successful step</text>\n";

    std::size_t color = 0;
    double legend_y = kTop + 16;
    for (auto& [engine, points] : series) {
        std::sort(points.begin(), points.end());
        const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(*kPalette))];
        if (points.size() > 1) {
            svg << "<polyline fill=\"none\" stroke=\"" << stroke
                << "\" stroke-width=\"2\" points=\"";
            for (const auto& [x, y] : points)
                svg << fmt(px(x)) << "," << fmt(py(y)) << " ";
            svg << "\"/>\n";
        }
        for (const auto& [x, y] : points)
            svg << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y))
                << "\" r=\"3.5\" fill=\"" << stroke << "\"/>\n";
        svg << "<rect x=\"" << kRight + 10 << "\" y=\"" << legend_y - 9
            << "\" width=\"12\" height=\"12\" fill=\"" << stroke << "\"/>\n";
        svg << "<text x=\"" << kRight + 28 << "\" y=\"" << legend_y + 2
            << "\" font-size=\"12\">" << engine << "</text>\n";
        legend_y += 20;
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace redsim::cli
