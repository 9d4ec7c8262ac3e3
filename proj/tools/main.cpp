// interfero: command-line front end over the interfero C API.
//
//   interfero <family|figure> [--config FILE] [--out DIR]
//             [--format csv,svg,json] [--seed N] [--set key=value ...]
//
// Families: homi, msi, mzi, noon, fisher, fit, validate.
// Figures:  fig2 .. fig7.
// Parameter resolution order: built-in defaults, then the JSON config
// file, then --set overrides.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "interfero/interfero.h"
#include "json.hpp"

namespace {

using Params = std::map<std::string, std::string>;

struct CommonArgs {
    std::string config_file;
    std::string out_dir = "out";
    std::string formats = "csv,svg,json";
    std::uint64_t seed = 1;
    std::vector<std::string> sets;
};

[[noreturn]] void die(const std::string& context) {
    std::cerr << "error: " << context;
    const char* detail = ifo_last_error();
    if (detail && *detail) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    std::exit(1);
}

void check(ifo_status status, const std::string& context) {
    if (status != IFO_OK)
        die(context + ": " + ifo_status_name(status));
}

Params load_params(const CommonArgs& args) {
    Params p;
    if (!args.config_file.empty()) {
        std::ifstream in(args.config_file);
        if (!in) die("cannot open config file " + args.config_file);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            die("config file " + args.config_file + ": " + e.what());
        }
        if (!j.is_object()) die("config file must hold a JSON object");
        for (const auto& [k, v] : j.items())
            p[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    for (const auto& kv : args.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            die("--set expects key=value, got '" + kv + "'");
        p[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return p;
}

double get_num(const Params& p, const std::string& key, double fallback) {
    const auto it = p.find(key);
    if (it == p.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        die("parameter '" + key + "' is not a number: " + it->second);
    }
}

int get_int(const Params& p, const std::string& key, int fallback) {
    return static_cast<int>(get_num(p, key, fallback));
}

std::string get_str(const Params& p, const std::string& key,
                    const std::string& fallback) {
    const auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

struct Formats {
    bool csv = false, svg = false, json = false;
};

Formats parse_formats(const std::string& spec) {
    Formats f;
    f.csv = spec.find("csv") != std::string::npos;
    f.svg = spec.find("svg") != std::string::npos;
    f.json = spec.find("json") != std::string::npos;
    if (!f.csv && !f.svg && !f.json)
        die("--format must name at least one of csv,svg,json");
    return f;
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) die("cannot create output directory " + dir + ": " + ec.message());
}

void emit_curve(ifo_curve* curve, const CommonArgs& args, const std::string& stem,
                const std::string& title) {
    const Formats f = parse_formats(args.formats);
    ensure_out_dir(args.out_dir);
    const auto base = std::filesystem::path(args.out_dir) / stem;
    if (f.csv) {
        const auto path = base.string() + ".csv";
        check(ifo_curve_write_csv(curve, path.c_str()), path);
        std::cout << "wrote " << path << "\n";
    }
    if (f.svg) {
        const auto path = base.string() + ".svg";
        check(ifo_curve_write_svg(curve, path.c_str(), title.c_str()), path);
        std::cout << "wrote " << path << "\n";
    }
}

void write_json_file(const CommonArgs& args, const std::string& stem,
                     const nlohmann::json& j) {
    if (!parse_formats(args.formats).json) return;
    ensure_out_dir(args.out_dir);
    const auto path = (std::filesystem::path(args.out_dir) / (stem + ".json")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot write " + path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
}

// Replaces the closed-form curve values with the brute-force quadrature of
// a tabulated envelope; used by the envelope_file parameter.
std::vector<double> tabulated_curve(const std::string& family, const Params& p,
                                    const std::string& envelope_file,
                                    const std::vector<double>& taus) {
    const double trunc = get_num(p, "quad_sigmas", 8.0);
    const int ppm = get_int(p, "quad_points", 64);
    const double tol = get_num(p, "quad_tol", 1e-5);
    std::vector<double> values(taus.size());

    if (family == "mzi") {
        ifo_spectrum_config* cfg = nullptr;
        check(ifo_spectrum_config_new(get_int(p, "n_modes", 3),
                                      get_num(p, "alpha", 5.0),
                                      get_num(p, "gamma", 2.0),
                                      get_num(p, "omega0", 50.0), &cfg),
              "spectrum config");
        ifo_envelope1d* env = nullptr;
        check(ifo_envelope1d_load(envelope_file.c_str(), &env), envelope_file);
        for (std::size_t i = 0; i < taus.size(); ++i)
            check(ifo_oracle_mzi_tabulated(cfg, env, taus[i], trunc, ppm, tol,
                                           &values[i]),
                  "mzi oracle");
        ifo_envelope1d_free(env);
        ifo_spectrum_config_free(cfg);
        return values;
    }

    ifo_spectral_config* cfg = nullptr;
    check(ifo_spectral_config_new(get_int(p, "n_modes", 3),
                                  get_num(p, "alpha", 5.0),
                                  get_num(p, "gamma", 2.0),
                                  get_num(p, "omega0", family == "homi" ? 0.0 : 50.0),
                                  &cfg),
          "spectral config");
    ifo_envelope2d* env = nullptr;
    check(ifo_envelope2d_load(envelope_file.c_str(), &env), envelope_file);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const auto status =
            family == "homi"
                ? ifo_oracle_homi_tabulated(cfg, env, taus[i], trunc, ppm, tol,
                                            &values[i])
                : ifo_oracle_noon_tabulated(cfg, env, taus[i], trunc, ppm, tol,
                                            &values[i]);
        check(status, family + " oracle");
    }
    ifo_envelope2d_free(env);
    ifo_spectral_config_free(cfg);
    return values;
}

void write_tabulated_csv(const CommonArgs& args, const std::string& family,
                         const Params& p, const std::vector<double>& taus,
                         const std::vector<double>& values) {
    ensure_out_dir(args.out_dir);
    const auto path =
        (std::filesystem::path(args.out_dir) / (family + "_curve.csv")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot write " + path);
    out << "# family: " << family << "\n";
    out << "# path: brute-force oracle with tabulated envelope\n";
    out << "# envelope_file: " << get_str(p, "envelope_file", "") << "\n";
    out << "# n_modes: " << get_int(p, "n_modes", 3) << "\n";
    out << "# mode_spacing_rad_per_ps: " << get_num(p, "alpha", 5.0) << "\n";
    out << "# mode_width_rad_per_ps: " << get_num(p, "gamma", 2.0) << "\n";
    out << "# center_frequency_rad_per_ps: "
        << get_num(p, "omega0", family == "homi" ? 0.0 : 50.0) << "\n";
    out << "tau_ps,probability\n";
    char buf[64];
    for (std::size_t i = 0; i < taus.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", taus[i], values[i]);
        out << buf;
    }
    std::cout << "wrote " << path << "\n";
}

std::vector<double> make_grid(double lo, double hi, int n) {
    if (!(hi > lo) || n < 2) die("need a non-empty sampling range with >= 2 samples");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    g.back() = hi;
    return g;
}

int run_spectral_family(const std::string& family, const CommonArgs& args) {
    const Params p = load_params(args);
    const double tau_min = get_num(p, "tau_min", -1.5);
    const double tau_max = get_num(p, "tau_max", 1.5);
    const int samples = get_int(p, "samples", 3001);

    const std::string envelope_file = get_str(p, "envelope_file", "");
    if (!envelope_file.empty()) {
        const auto taus = make_grid(tau_min, tau_max, samples);
        const auto values = tabulated_curve(family, p, envelope_file, taus);
        write_tabulated_csv(args, family, p, taus, values);
        return 0;
    }

    ifo_curve* curve = nullptr;
    if (family == "mzi") {
        ifo_spectrum_config* cfg = nullptr;
        check(ifo_spectrum_config_new(get_int(p, "n_modes", 3),
                                      get_num(p, "alpha", 5.0),
                                      get_num(p, "gamma", 2.0),
                                      get_num(p, "omega0", 50.0), &cfg),
              "spectrum config");
        check(ifo_mzi_pattern(cfg, tau_min, tau_max, samples, &curve), "mzi pattern");
        ifo_spectrum_config_free(cfg);
    } else {
        ifo_spectral_config* cfg = nullptr;
        check(ifo_spectral_config_new(get_int(p, "n_modes", 3),
                                      get_num(p, "alpha", 5.0),
                                      get_num(p, "gamma", 2.0),
                                      get_num(p, "omega0", family == "homi" ? 0.0 : 50.0),
                                      &cfg),
              "spectral config");
        const auto status = family == "homi"
                                ? ifo_homi_pattern(cfg, tau_min, tau_max, samples, &curve)
                                : ifo_noon_pattern(cfg, tau_min, tau_max, samples, &curve);
        check(status, family + " pattern");
        ifo_spectral_config_free(cfg);
    }
    emit_curve(curve, args, family + "_curve", family + " pattern");
    ifo_curve_free(curve);
    return 0;
}

int run_msi(const CommonArgs& args) {
    const Params p = load_params(args);
    ifo_slit_config* cfg = nullptr;
    check(ifo_slit_config_new(get_int(p, "n_slits", 4),
                              get_num(p, "slit_width", 1e-5),
                              get_num(p, "slit_pitch", 5e-4),
                              get_num(p, "wavelength", 500e-9), &cfg),
          "slit config");
    ifo_curve* curve = nullptr;
    check(ifo_msi_pattern(cfg, get_num(p, "sin_min", -3.2e-3),
                          get_num(p, "sin_max", 3.2e-3),
                          get_int(p, "samples", 3001), &curve),
          "msi pattern");
    ifo_slit_config_free(cfg);
    emit_curve(curve, args, "msi_curve", "multi-slit pattern");
    ifo_curve_free(curve);
    return 0;
}

int run_fisher(const CommonArgs& args) {
    const Params p = load_params(args);
    ifo_spectral_config* cfg = nullptr;
    check(ifo_spectral_config_new(get_int(p, "n_modes", 3),
                                  get_num(p, "alpha", 5.0),
                                  get_num(p, "gamma", 2.0), 0.0, &cfg),
          "spectral config");

    ifo_curve* curve = nullptr;
    check(ifo_fisher_curve(cfg, get_num(p, "tau_min", -1.5),
                           get_num(p, "tau_max", 1.5),
                           get_int(p, "samples", 3001), &curve),
          "fisher curve");
    emit_curve(curve, args, "fisher_curve", "Fisher information");
    ifo_curve_free(curve);

    double tau_star = 0.0, fi_max = 0.0;
    int on_boundary = 0;
    check(ifo_max_fisher(cfg, 0.0, 0.0, &tau_star, &fi_max, &on_boundary),
          "max fisher");
    nlohmann::json summary = {{"tau_star_ps", tau_star},
                              {"fi_max_per_ps2", fi_max},
                              {"window_clipped", on_boundary != 0}};

    if (get_int(p, "crlb", 0) != 0) {
        const int num = get_int(p, "num_measurements", 10000);
        const int trials = get_int(p, "num_trials", 1000);
        double true_tau = get_num(p, "true_tau", -1.0);
        if (!(true_tau > 0.0))
            check(ifo_identifiable_operating_point(cfg, num, &true_tau),
                  "operating point");
        double sd = 0.0, crlb = 0.0, mean = 0.0;
        check(ifo_crlb_monte_carlo(cfg, true_tau, num, trials, args.seed, &sd,
                                   &crlb, &mean),
              "crlb monte carlo");
        summary["crlb"] = {{"true_tau_ps", true_tau},
                           {"num_measurements", num},
                           {"num_trials", trials},
                           {"seed", args.seed},
                           {"estimator_sd_ps", sd},
                           {"crlb_sd_ps", crlb},
                           {"mean_estimate_ps", mean},
                           {"sd_over_crlb", sd / crlb}};
    }
    ifo_spectral_config_free(cfg);
    write_json_file(args, "fisher_summary", summary);
    return 0;
}

int run_fit(const CommonArgs& args) {
    const Params p = load_params(args);
    const int n_min = get_int(p, "n_min", 1);
    const int n_max = get_int(p, "n_max", 40);
    const double alpha = get_num(p, "alpha", 5.0);
    const double gamma = get_num(p, "gamma", 2.0);

    std::vector<double> ns, ys;
    for (int n = n_min; n <= n_max; ++n) {
        ifo_spectral_config* cfg = nullptr;
        check(ifo_spectral_config_new(n, alpha, gamma, 0.0, &cfg), "spectral config");
        double tau_star = 0.0, fi_max = 0.0;
        check(ifo_max_fisher(cfg, 0.0, 0.0, &tau_star, &fi_max, nullptr), "max fisher");
        ifo_spectral_config_free(cfg);
        ns.push_back(n);
        ys.push_back(std::sqrt(fi_max));
    }

    const Formats f = parse_formats(args.formats);
    ensure_out_dir(args.out_dir);
    if (f.csv) {
        const auto path =
            (std::filesystem::path(args.out_dir) / "sqrt_fi_vs_n.csv").string();
        std::ofstream out(path, std::ios::binary);
        if (!out) die("cannot write " + path);
        out << "# mode_spacing_rad_per_ps: " << alpha << "\n";
        out << "# mode_width_rad_per_ps: " << gamma << "\n";
        out << "n_modes,sqrt_max_fisher_information\n";
        char buf[64];
        for (std::size_t i = 0; i < ns.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%d,%.12g\n", static_cast<int>(ns[i]), ys[i]);
            out << buf;
        }
        std::cout << "wrote " << path << "\n";
    }

    double slope = 0.0, intercept = 0.0, r2 = 0.0;
    check(ifo_sqrt_fi_linear_fit(alpha, gamma, n_min, n_max, &slope, &intercept, &r2),
          "linear fit");
    write_json_file(args, "sqrt_fi_fit", {{"slope", slope},
                                          {"intercept", intercept},
                                          {"r_squared", r2},
                                          {"n_min", n_min},
                                          {"n_max", n_max}});
    std::cout << "fit: slope=" << slope << " intercept=" << intercept
              << " r_squared=" << r2 << "\n";
    return 0;
}

int run_validate(const CommonArgs& args, const std::string& profile) {
    char* json = nullptr;
    int all_pass = 0;
    check(ifo_run_validate(profile.c_str(), &json, &all_pass), "validate");
    std::cout << json << "\n";
    if (parse_formats(args.formats).json) {
        ensure_out_dir(args.out_dir);
        const auto path =
            (std::filesystem::path(args.out_dir) / "validation_report.json").string();
        std::ofstream out(path, std::ios::binary);
        if (!out) die("cannot write " + path);
        out << json << "\n";
        std::cerr << "wrote " << path << "\n";
    }
    ifo_string_free(json);
    return all_pass ? 0 : 1;
}

int run_figure(const CommonArgs& args, const std::string& figure) {
    int n_files = 0;
    check(ifo_run_figure(figure.c_str(), args.out_dir.c_str(), args.formats.c_str(),
                         &n_files),
          figure);
    std::cout << figure << ": wrote " << n_files << " files to " << args.out_dir
              << "\n";
    return 0;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_file, "JSON file with family parameters");
    cmd->add_option("--out", args.out_dir, "output directory (default: out)");
    cmd->add_option("--format", args.formats, "comma list from csv,svg,json");
    cmd->add_option("--seed", args.seed, "seed for stochastic runs");
    cmd->add_option("--set", args.sets, "override a parameter as key=value")
        ->take_all();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        std::string("interfero ") + ifo_version() +
        " - multi-mode interference patterns and Fisher-information metrology"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string profile = "default";

    auto* homi = app.add_subcommand("homi", "HOM coincidence pattern");
    auto* msi = app.add_subcommand("msi", "multi-slit intensity pattern");
    auto* mzi = app.add_subcommand("mzi", "Mach-Zehnder count pattern");
    auto* noon = app.add_subcommand("noon", "NOON coincidence pattern");
    auto* fisher = app.add_subcommand("fisher", "Fisher information curve and maximum");
    auto* fit = app.add_subcommand("fit", "sqrt(max FI) vs mode number with linear fit");
    auto* validate = app.add_subcommand("validate", "run the validation suite");
    validate->add_option("--profile", profile, "default|strict");
    std::vector<CLI::App*> figures;
    for (const char* name : {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"})
        figures.push_back(
            app.add_subcommand(name, std::string("render the ") + name + " panel set"));

    for (auto* cmd : {homi, msi, mzi, noon, fisher, fit, validate})
        add_common(cmd, args);
    for (auto* cmd : figures) add_common(cmd, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (homi->parsed()) return run_spectral_family("homi", args);
        if (mzi->parsed()) return run_spectral_family("mzi", args);
        if (noon->parsed()) return run_spectral_family("noon", args);
        if (msi->parsed()) return run_msi(args);
        if (fisher->parsed()) return run_fisher(args);
        if (fit->parsed()) return run_fit(args);
        if (validate->parsed()) return run_validate(args, profile);
        for (std::size_t i = 0; i < figures.size(); ++i)
            if (figures[i]->parsed())
                return run_figure(args, figures[i]->get_name());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand selected\n";
    return 1;
}
