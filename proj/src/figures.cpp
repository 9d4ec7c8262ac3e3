#include "interfero/figures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "interfero/fisher.hpp"
#include "interfero/homi.hpp"
#include "interfero/io.hpp"
#include "interfero/msi.hpp"
#include "interfero/mzi_noon.hpp"
#include "interfero/svg.hpp"

namespace interfero::figures {

namespace {

// Reference parameter sets for the figure panels.
constexpr double kAlpha = 5.0;          // rad/ps
constexpr double kGamma = 2.0;          // rad/ps
constexpr double kSlitWidth = 1e-5;     // m
constexpr double kSlitPitch = 5e-4;     // m
constexpr double kWavelength = 500e-9;  // m; free choice, recorded per file
constexpr double kCarrier = 50.0;       // rad/ps; free choice, recorded per file
constexpr double kTauMax = 1.5;         // ps
constexpr int kTauSamples = 3001;

struct Sink {
    const Options& opt;
    std::vector<std::string> files;

    std::string path(const std::string& stem, const char* ext) const {
        return (std::filesystem::path(opt.out_dir) / (stem + ext)).string();
    }

    void curve(const std::string& stem, const PatternCurve& c,
               const std::string& x_name, const std::string& y_name,
               const std::string& title) {
        if (opt.csv) {
            const auto p = path(stem, ".csv");
            io::write_curve_csv(p, c, x_name, y_name);
            files.push_back(p);
        }
        if (opt.svg) {
            const auto p = path(stem, ".svg");
            svg::write_line_plot(p, c.abscissa, c.values,
                                 {title, x_name, y_name});
            files.push_back(p);
        }
    }

    void xy(const std::string& stem, std::span<const double> xs,
            std::span<const double> ys, const std::string& x_name,
            const std::string& y_name, const io::Header& header,
            const std::string& title) {
        if (opt.csv) {
            const auto p = path(stem, ".csv");
            io::write_xy_csv(p, xs, ys, x_name, y_name, header);
            files.push_back(p);
        }
        if (opt.svg) {
            const auto p = path(stem, ".svg");
            svg::write_line_plot(p, xs, ys, {title, x_name, y_name});
            files.push_back(p);
        }
    }

    void grid(const std::string& stem, std::span<const double> xs,
              std::span<const double> ys, std::span<const double> vals,
              const std::string& x_name, const std::string& y_name,
              const std::string& v_name, const io::Header& header,
              const std::string& title) {
        if (opt.csv) {
            const auto p = path(stem, ".csv");
            io::write_grid_csv(p, xs, ys, vals, x_name, y_name, v_name, header);
            files.push_back(p);
        }
        if (opt.svg) {
            const auto p = path(stem, ".svg");
            svg::write_heatmap(p, xs, ys, vals, {title, x_name, y_name});
            files.push_back(p);
        }
    }

    void json_file(const std::string& stem, const nlohmann::json& j) {
        if (!opt.json) return;
        const auto p = path(stem, ".json");
        std::ofstream out(p, std::ios::binary);
        if (!out) throw std::runtime_error(p + ": cannot open for writing");
        out << j.dump(2) << "\n";
        files.push_back(p);
    }
};

io::Header spectral_header(const SpectralModeConfig& c) {
    return {{"n_modes", std::to_string(c.n_modes)},
            {"mode_spacing_rad_per_ps", io::format_number(c.mode_spacing)},
            {"mode_width_rad_per_ps", io::format_number(c.mode_width)},
            {"center_frequency_rad_per_ps", io::format_number(c.center_frequency)}};
}

io::Header slit_header(const SlitConfig& c) {
    return {{"n_slits", std::to_string(c.n_slits)},
            {"slit_width_m", io::format_number(c.slit_width)},
            {"slit_pitch_m", io::format_number(c.slit_pitch)},
            {"wavelength_m", io::format_number(c.wavelength)}};
}

void emit_jsa_panel(Sink& sink, const std::string& stem,
                    const SpectralModeConfig& c, Correlation corr,
                    const std::string& title) {
    const double span = (c.n_modes - 1) * c.mode_spacing + 5.0 * c.mode_width;
    const auto ax1 = linspace(c.center_frequency - span, c.center_frequency + span, 121);
    std::vector<double> vals(ax1.size() * ax1.size());
    for (std::size_t j = 0; j < ax1.size(); ++j)
        for (std::size_t i = 0; i < ax1.size(); ++i)
            vals[j * ax1.size() + i] = jsa_value(c, ax1[i], ax1[j], corr);
    auto header = spectral_header(c);
    header.emplace_back("correlation", corr == Correlation::anti_correlated
                                           ? "anti_correlated"
                                           : "correlated");
    sink.grid(stem, ax1, ax1, vals, "omega1_rad_per_ps", "omega2_rad_per_ps",
              "amplitude", header, title);
}

void emit_slit_panel(Sink& sink, const std::string& stem, const SlitConfig& c) {
    const double span = (c.n_slits - 1) * c.slit_pitch / 2.0 + c.slit_pitch;
    const auto xs = linspace(-span, span, 4001);
    std::vector<double> t(xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (int k = 1; k <= c.n_slits; ++k)
            if (std::abs(xs[i] - c.slit_center(k)) <= 0.5 * c.slit_width)
                t[i] = 1.0;
    sink.xy(stem, xs, t, "position_m", "transmission", slit_header(c),
            "aperture, N=" + std::to_string(c.n_slits));
}

void emit_msi_panel(Sink& sink, const std::string& stem, const SlitConfig& c,
                    double window) {
    const auto curve = msi::pattern(c, -window, window, kTauSamples);
    sink.curve(stem, curve, "sin_theta", "intensity",
               "multi-slit pattern, N=" + std::to_string(c.n_slits));
}

void run_fig2(Sink& sink) {
    for (int n = 1; n <= 8; ++n) {
        const SpectralModeConfig c{n, kAlpha, kGamma, 0.0};
        const std::string suffix = "_n" + std::to_string(n);
        emit_jsa_panel(sink, "fig2_jsa" + suffix, c, Correlation::anti_correlated,
                       "joint spectral amplitude, N=" + std::to_string(n));
        sink.curve("fig2_homi" + suffix, homi::pattern(c, -kTauMax, kTauMax, kTauSamples),
                   "tau_ps", "coincidence_probability",
                   "HOM pattern, N=" + std::to_string(n));
        const SlitConfig s{n, kSlitWidth, kSlitPitch, kWavelength};
        emit_slit_panel(sink, "fig2_slits" + suffix, s);
        emit_msi_panel(sink, "fig2_msi" + suffix, s, 3.2e-3);
    }
}

void run_fig3(Sink& sink) {
    const double gammas[] = {0.5, 2.5, 4.5};
    for (int i = 0; i < 3; ++i) {
        const SpectralModeConfig c{4, kAlpha, gammas[i], 0.0};
        const std::string suffix = "_" + std::to_string(i + 1);
        emit_jsa_panel(sink, "fig3_jsa" + suffix, c, Correlation::anti_correlated,
                       "JSA, gamma=" + io::format_number(gammas[i]));
        sink.curve("fig3_homi" + suffix, homi::pattern(c, -kTauMax, kTauMax, kTauSamples),
                   "tau_ps", "coincidence_probability",
                   "HOM pattern, gamma=" + io::format_number(gammas[i]));
    }
    const double widths[] = {1e-4, 1.5e-4, 2e-4};
    for (int i = 0; i < 3; ++i) {
        const SlitConfig s{4, widths[i], kSlitPitch, kWavelength};
        const std::string suffix = "_" + std::to_string(i + 1);
        emit_slit_panel(sink, "fig3_slits" + suffix, s);
        emit_msi_panel(sink, "fig3_msi" + suffix, s, 3.2e-3);
    }
}

void run_fig4(Sink& sink) {
    const double alphas[] = {2.5, 5.0, 7.5};
    for (int i = 0; i < 3; ++i) {
        const SpectralModeConfig c{4, alphas[i], kGamma, 0.0};
        const std::string suffix = "_" + std::to_string(i + 1);
        emit_jsa_panel(sink, "fig4_jsa" + suffix, c, Correlation::anti_correlated,
                       "JSA, alpha=" + io::format_number(alphas[i]));
        sink.curve("fig4_homi" + suffix, homi::pattern(c, -kTauMax, kTauMax, kTauSamples),
                   "tau_ps", "coincidence_probability",
                   "HOM pattern, alpha=" + io::format_number(alphas[i]));
    }
    const double pitches[] = {3e-4, 6e-4, 9e-4};
    for (int i = 0; i < 3; ++i) {
        const SlitConfig s{4, 1.5e-4, pitches[i], kWavelength};
        const std::string suffix = "_" + std::to_string(i + 1);
        emit_slit_panel(sink, "fig4_slits" + suffix, s);
        emit_msi_panel(sink, "fig4_msi" + suffix, s, 3.5e-3);
    }
}

void run_fig5(Sink& sink) {
    for (int n = 1; n <= 8; ++n) {
        const SpectralModeConfig c{n, kAlpha, kGamma, 0.0};
        const auto fc = fisher::curve(c, -kTauMax, kTauMax, kTauSamples);
        auto header = spectral_header(c);
        sink.xy("fig5_fi_n" + std::to_string(n), fc.tau_grid, fc.fi_values,
                "tau_ps", "fisher_information_per_ps2", header,
                "Fisher information, N=" + std::to_string(n));
    }
}

void run_fig6(Sink& sink) {
    const auto pts = fisher::sqrt_fi_scan(kAlpha, kGamma, 1, 40);
    std::vector<double> ns, ys;
    for (const auto& [n, y] : pts) {
        ns.push_back(static_cast<double>(n));
        ys.push_back(y);
    }
    const io::Header header = {
        {"mode_spacing_rad_per_ps", io::format_number(kAlpha)},
        {"mode_width_rad_per_ps", io::format_number(kGamma)}};
    sink.xy("fig6_sqrt_fi", ns, ys, "n_modes", "sqrt_max_fisher_information",
            header, "sqrt of maximal Fisher information vs N");

    const auto fit = fisher::sqrt_fi_linear_fit(kAlpha, kGamma, 1, 40);
    sink.json_file("fig6_fit", {{"slope", fit.slope},
                                {"intercept", fit.intercept},
                                {"r_squared", fit.r_squared},
                                {"n_min", 1},
                                {"n_max", 40},
                                {"mode_spacing_rad_per_ps", kAlpha},
                                {"mode_width_rad_per_ps", kGamma}});
}

void run_fig7(Sink& sink) {
    for (int n = 1; n <= 8; ++n) {
        const std::string suffix = "_n" + std::to_string(n);
        const SingleSpectrumConfig sc{n, kAlpha, kGamma, kCarrier};
        const double span = (n - 1) * kAlpha + 5.0 * kGamma;
        const auto ws = linspace(kCarrier - span, kCarrier + span, 2001);
        std::vector<double> amp(ws.size(), 0.0);
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (int k = 1; k <= n; ++k) {
                const double d = ws[i] - sc.center_frequency - sc.mode_offset(k);
                amp[i] += std::exp(-d * d / (kGamma * kGamma));
            }
        const io::Header sh = {
            {"n_modes", std::to_string(n)},
            {"mode_spacing_rad_per_ps", io::format_number(kAlpha)},
            {"mode_width_rad_per_ps", io::format_number(kGamma)},
            {"center_frequency_rad_per_ps", io::format_number(kCarrier)}};
        sink.xy("fig7_spectrum" + suffix, ws, amp, "omega_rad_per_ps", "amplitude",
                sh, "source spectrum, N=" + std::to_string(n));

        sink.curve("fig7_mzi" + suffix, mzi::pattern(sc, -kTauMax, kTauMax, kTauSamples),
                   "tau_ps", "count_probability",
                   "Mach-Zehnder pattern, N=" + std::to_string(n));

        const SpectralModeConfig nc{n, kAlpha, kGamma, kCarrier};
        emit_jsa_panel(sink, "fig7_noon_jsa" + suffix, nc, Correlation::correlated,
                       "NOON joint spectrum, N=" + std::to_string(n));
        sink.curve("fig7_noon" + suffix, noon::pattern(nc, -kTauMax, kTauMax, kTauSamples),
                   "tau_ps", "coincidence_probability",
                   "NOON pattern, N=" + std::to_string(n));
    }
}

}  // namespace

FigureId figure_from_string(const std::string& name) {
    if (name == "fig2") return FigureId::fig2;
    if (name == "fig3") return FigureId::fig3;
    if (name == "fig4") return FigureId::fig4;
    if (name == "fig5") return FigureId::fig5;
    if (name == "fig6") return FigureId::fig6;
    if (name == "fig7") return FigureId::fig7;
    throw std::invalid_argument("unknown figure id: " + name);
}

const char* figure_name(FigureId id) {
    switch (id) {
        case FigureId::fig2: return "fig2";
        case FigureId::fig3: return "fig3";
        case FigureId::fig4: return "fig4";
        case FigureId::fig5: return "fig5";
        case FigureId::fig6: return "fig6";
        case FigureId::fig7: return "fig7";
    }
    return "unknown";
}

std::vector<std::string> run_figure(FigureId id, const Options& options) {
    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec)
        throw std::runtime_error(options.out_dir + ": cannot create output directory (" +
                                 ec.message() + ")");
    Sink sink{options, {}};
    switch (id) {
        case FigureId::fig2: run_fig2(sink); break;
        case FigureId::fig3: run_fig3(sink); break;
        case FigureId::fig4: run_fig4(sink); break;
        case FigureId::fig5: run_fig5(sink); break;
        case FigureId::fig6: run_fig6(sink); break;
        case FigureId::fig7: run_fig7(sink); break;
    }
    return sink.files;
}

}  // namespace interfero::figures
