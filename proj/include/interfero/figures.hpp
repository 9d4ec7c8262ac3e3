#ifndef INTERFERO_FIGURES_HPP
#define INTERFERO_FIGURES_HPP

#include <string>
#include <vector>

// Batch generation of the library's reference figure panels: every panel
// is emitted as CSV (and optionally SVG), deterministic byte-for-byte, with
// the generating parameters embedded in each file header.

namespace interfero::figures {

enum class FigureId { fig2, fig3, fig4, fig5, fig6, fig7 };

FigureId figure_from_string(const std::string& name);
const char* figure_name(FigureId id);

struct Options {
    std::string out_dir = "out";
    bool csv = true;
    bool svg = true;
    bool json = true;
};

// Renders all panels of one figure set into out_dir, creating it if
// needed. Returns the paths of every file written.
std::vector<std::string> run_figure(FigureId id, const Options& options);

}  // namespace interfero::figures

#endif  // INTERFERO_FIGURES_HPP
