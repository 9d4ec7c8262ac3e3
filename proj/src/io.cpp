#include "interfero/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace interfero::io {

namespace {

void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no newline translation
    if (!out) fail(path, "cannot open for writing");
    return out;
}

void write_header(std::ofstream& out, const Header& header) {
    for (const auto& [k, v] : header) out << "# " << k << ": " << v << "\n";
}

// Pulls the grid-definition line out of an envelope file, skipping comments.
std::vector<double> read_grid_line(std::istream& in, const std::string& path) {
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line.substr(first));
        std::string tag;
        ls >> tag;
        if (tag != "grid") fail(path, "expected a 'grid' line, got: " + line);
        std::vector<double> nums;
        double x;
        while (ls >> x) nums.push_back(x);
        if (nums.size() != 3 && nums.size() != 6)
            fail(path, "grid line needs 3 (1-D) or 6 (2-D) numbers");
        return nums;
    }
    fail(path, "no grid line found");
    return {};
}

std::vector<double> read_values(std::istream& in, std::size_t count,
                                const std::string& path) {
    std::vector<double> vals;
    vals.reserve(count);
    double x;
    while (vals.size() < count && in >> x) vals.push_back(x);
    if (vals.size() != count)
        fail(path, "expected " + std::to_string(count) + " sample values, got " +
                       std::to_string(vals.size()));
    return vals;
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Header curve_header(const PatternCurve& curve) {
    Header h;
    h.emplace_back("family", family_name(curve.family));
    std::visit(
        [&h](const auto& cfg) {
            using T = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<T, SlitConfig>) {
                h.emplace_back("n_slits", std::to_string(cfg.n_slits));
                h.emplace_back("slit_width_m", format_number(cfg.slit_width));
                h.emplace_back("slit_pitch_m", format_number(cfg.slit_pitch));
                h.emplace_back("wavelength_m", format_number(cfg.wavelength));
            } else {
                h.emplace_back("n_modes", std::to_string(cfg.n_modes));
                h.emplace_back("mode_spacing_rad_per_ps", format_number(cfg.mode_spacing));
                h.emplace_back("mode_width_rad_per_ps", format_number(cfg.mode_width));
                h.emplace_back("center_frequency_rad_per_ps",
                               format_number(cfg.center_frequency));
            }
        },
        curve.config_snapshot);
    for (const auto& kv : curve.metadata) h.push_back(kv);
    return h;
}

void write_xy_csv(const std::string& path, std::span<const double> xs,
                  std::span<const double> ys, const std::string& x_name,
                  const std::string& y_name, const Header& header) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("write_xy_csv: column size mismatch");
    auto out = open_out(path);
    write_header(out, header);
    out << x_name << "," << y_name << "\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << format_number(xs[i]) << "," << format_number(ys[i]) << "\n";
    if (!out) fail(path, "write failed");
}

void write_curve_csv(const std::string& path, const PatternCurve& curve,
                     const std::string& x_name, const std::string& y_name) {
    write_xy_csv(path, curve.abscissa, curve.values, x_name, y_name,
                 curve_header(curve));
}

void write_grid_csv(const std::string& path, std::span<const double> xs,
                    std::span<const double> ys, std::span<const double> values,
                    const std::string& x_name, const std::string& y_name,
                    const std::string& v_name, const Header& header) {
    if (values.size() != xs.size() * ys.size())
        throw std::invalid_argument("write_grid_csv: value count does not match grid");
    auto out = open_out(path);
    write_header(out, header);
    out << x_name << "," << y_name << "," << v_name << "\n";
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (std::size_t i = 0; i < xs.size(); ++i)
            out << format_number(xs[i]) << "," << format_number(ys[j]) << ","
                << format_number(values[j * xs.size() + i]) << "\n";
    if (!out) fail(path, "write failed");
}

oracle::TabulatedEnvelope1D load_envelope_1d(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open");
    const auto g = read_grid_line(in, path);
    if (g.size() != 3) fail(path, "file declares a 2-D grid, expected 1-D");
    const int nu = static_cast<int>(g[2]);
    if (nu < 2) fail(path, "grid needs at least 2 samples");
    return {g[0], g[1], read_values(in, static_cast<std::size_t>(nu), path)};
}

oracle::TabulatedEnvelope2D load_envelope_2d(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open");
    const auto g = read_grid_line(in, path);
    if (g.size() != 6) fail(path, "file declares a 1-D grid, expected 2-D");
    const int nu = static_cast<int>(g[2]);
    const int nv = static_cast<int>(g[5]);
    if (nu < 2 || nv < 2) fail(path, "grid needs at least 2 samples per axis");
    return {g[0],  g[1], nu, g[3], g[4], nv,
            read_values(in, static_cast<std::size_t>(nu) * nv, path)};
}

int envelope_file_rank(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open");
    return read_grid_line(in, path).size() == 3 ? 1 : 2;
}

}  // namespace interfero::io
