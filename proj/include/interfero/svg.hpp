#ifndef INTERFERO_SVG_HPP
#define INTERFERO_SVG_HPP

#include <span>
#include <string>

// Minimal self-contained SVG rendering for curves and grids; no external
// plotting dependency. Output is deterministic byte-for-byte.

namespace interfero::svg {

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 860;
    int height = 520;
};

void write_line_plot(const std::string& path, std::span<const double> xs,
                     std::span<const double> ys, const PlotOptions& options);

// values are row-major: values[j * nx + i] for cell (x_i, y_j).
void write_heatmap(const std::string& path, std::span<const double> xs,
                   std::span<const double> ys, std::span<const double> values,
                   const PlotOptions& options);

}  // namespace interfero::svg

#endif  // INTERFERO_SVG_HPP
