#include "interfero/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace interfero::svg {

namespace {

constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 34;
constexpr int kMarginBottom = 52;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Range {
    double lo, hi;
    double span() const { return hi - lo; }
};

Range padded_range(std::span<const double> v) {
    double lo = v[0], hi = v[0];
    for (double x : v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    if (hi == lo) {
        lo -= 0.5;
        hi += 0.5;
    } else {
        const double pad = 0.04 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
    return {lo, hi};
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

void write_frame(std::ofstream& out, const PlotOptions& o, const Range& rx,
                 const Range& ry) {
    const int w = o.width, h = o.height;
    const int px0 = kMarginLeft, px1 = w - kMarginRight;
    const int py0 = kMarginTop, py1 = h - kMarginBottom;
    out << "<rect x='" << px0 << "' y='" << py0 << "' width='" << (px1 - px0)
        << "' height='" << (py1 - py0)
        << "' fill='none' stroke='#444' stroke-width='1'/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double fx = rx.lo + rx.span() * t / 5.0;
        const double sx = px0 + (px1 - px0) * t / 5.0;
        out << "<line x1='" << num(sx) << "' y1='" << py1 << "' x2='" << num(sx)
            << "' y2='" << (py1 + 5) << "' stroke='#444'/>\n";
        out << "<text x='" << num(sx) << "' y='" << (py1 + 20)
            << "' font-size='12' text-anchor='middle'>" << tick_label(fx)
            << "</text>\n";
        const double fy = ry.lo + ry.span() * t / 5.0;
        const double sy = py1 - (py1 - py0) * t / 5.0;
        out << "<line x1='" << (px0 - 5) << "' y1='" << num(sy) << "' x2='" << px0
            << "' y2='" << num(sy) << "' stroke='#444'/>\n";
        out << "<text x='" << (px0 - 8) << "' y='" << num(sy + 4)
            << "' font-size='12' text-anchor='end'>" << tick_label(fy)
            << "</text>\n";
    }
    out << "<text x='" << (px0 + (px1 - px0) / 2) << "' y='" << (h - 14)
        << "' font-size='13' text-anchor='middle'>" << o.x_label << "</text>\n";
    out << "<text x='16' y='" << (py0 + (py1 - py0) / 2)
        << "' font-size='13' text-anchor='middle' transform='rotate(-90 16 "
        << (py0 + (py1 - py0) / 2) << ")'>" << o.y_label << "</text>\n";
    out << "<text x='" << (w / 2) << "' y='20' font-size='14' "
           "text-anchor='middle' font-weight='bold'>"
        << o.title << "</text>\n";
}

// five-anchor dark-blue -> teal -> yellow ramp
void colormap(double t, int& r, int& g, int& b) {
    static const double stops[5][3] = {{0.267, 0.005, 0.329},
                                       {0.229, 0.322, 0.546},
                                       {0.128, 0.567, 0.551},
                                       {0.369, 0.789, 0.383},
                                       {0.993, 0.906, 0.144}};
    t = std::clamp(t, 0.0, 1.0) * 4.0;
    const int i = std::min(static_cast<int>(t), 3);
    const double f = t - i;
    r = static_cast<int>(255.0 * (stops[i][0] + f * (stops[i + 1][0] - stops[i][0])));
    g = static_cast<int>(255.0 * (stops[i][1] + f * (stops[i + 1][1] - stops[i][1])));
    b = static_cast<int>(255.0 * (stops[i][2] + f * (stops[i + 1][2] - stops[i][2])));
}

}  // namespace

void write_line_plot(const std::string& path, std::span<const double> xs,
                     std::span<const double> ys, const PlotOptions& options) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("write_line_plot: need matching columns with >= 2 points");
    const Range rx = padded_range(xs), ry = padded_range(ys);
    const int px0 = kMarginLeft, px1 = options.width - kMarginRight;
    const int py0 = kMarginTop, py1 = options.height - kMarginBottom;

    auto out = open_out(path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << options.width
        << "' height='" << options.height << "' font-family='sans-serif'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    write_frame(out, options, rx, ry);
    out << "<polyline fill='none' stroke='#1f77b4' stroke-width='1.3' points='";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double sx = px0 + (px1 - px0) * (xs[i] - rx.lo) / rx.span();
        const double sy = py1 - (py1 - py0) * (ys[i] - ry.lo) / ry.span();
        out << num(sx) << "," << num(sy) << (i + 1 < xs.size() ? " " : "");
    }
    out << "'/>\n</svg>\n";
    if (!out) throw std::runtime_error(path + ": write failed");
}

void write_heatmap(const std::string& path, std::span<const double> xs,
                   std::span<const double> ys, std::span<const double> values,
                   const PlotOptions& options) {
    if (values.size() != xs.size() * ys.size() || xs.size() < 2 || ys.size() < 2)
        throw std::invalid_argument("write_heatmap: value count does not match grid");
    const Range rx{xs.front(), xs.back()};
    const Range ry{ys.front(), ys.back()};
    double vmax = values[0];
    for (double v : values) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;

    const int px0 = kMarginLeft, px1 = options.width - kMarginRight;
    const int py0 = kMarginTop, py1 = options.height - kMarginBottom;
    const double cw = static_cast<double>(px1 - px0) / xs.size();
    const double ch = static_cast<double>(py1 - py0) / ys.size();

    auto out = open_out(path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << options.width
        << "' height='" << options.height << "' font-family='sans-serif'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    for (std::size_t j = 0; j < ys.size(); ++j) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            int r, g, b;
            colormap(values[j * xs.size() + i] / vmax, r, g, b);
            const double sx = px0 + cw * i;
            const double sy = py1 - ch * (j + 1);
            out << "<rect x='" << num(sx) << "' y='" << num(sy) << "' width='"
                << num(cw + 0.5) << "' height='" << num(ch + 0.5) << "' fill='rgb("
                << r << "," << g << "," << b << ")'/>\n";
        }
    }
    write_frame(out, options, rx, ry);
    out << "</svg>\n";
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace interfero::svg
