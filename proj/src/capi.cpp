#include "interfero/interfero.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "interfero/analysis.hpp"
#include "interfero/core.hpp"
#include "interfero/figures.hpp"
#include "interfero/fisher.hpp"
#include "interfero/homi.hpp"
#include "interfero/io.hpp"
#include "interfero/msi.hpp"
#include "interfero/mzi_noon.hpp"
#include "interfero/oracle.hpp"
#include "interfero/svg.hpp"
#include "interfero/validate.hpp"

using namespace interfero;

struct ifo_spectral_config {
    SpectralModeConfig cfg;
};
struct ifo_spectrum_config {
    SingleSpectrumConfig cfg;
};
struct ifo_slit_config {
    SlitConfig cfg;
};
struct ifo_curve {
    PatternCurve curve;
    std::string x_name = "x";
    std::string y_name = "y";
    std::string title;
};
struct ifo_envelope1d {
    oracle::TabulatedEnvelope1D env;
};
struct ifo_envelope2d {
    oracle::TabulatedEnvelope2D env;
};

namespace {

thread_local std::string t_last_error;

ifo_status fail(ifo_status code, const char* what) {
    t_last_error = what ? what : "";
    return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
ifo_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return IFO_OK;
    } catch (const NyquistError& e) {
        return fail(IFO_ERR_NYQUIST, e.what());
    } catch (const ConvergenceError& e) {
        return fail(IFO_ERR_NO_CONVERGENCE, e.what());
    } catch (const IdentifiabilityError& e) {
        return fail(IFO_ERR_NOT_IDENTIFIABLE, e.what());
    } catch (const std::domain_error& e) {
        return fail(IFO_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(IFO_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(IFO_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(IFO_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(IFO_ERR_INTERNAL, "unknown error");
    }
}

ifo_status require(bool ok, const char* what) {
    return ok ? IFO_OK : fail(IFO_ERR_INVALID_ARGUMENT, what);
}

oracle::QuadratureSpec make_spec(double trunc, int ppm, double tol) {
    oracle::QuadratureSpec s;
    if (trunc > 0.0) s.truncation_sigmas = trunc;
    if (ppm > 0) s.points_per_mode = ppm;
    if (tol > 0.0) s.rel_tolerance = tol;
    return s;
}

ifo_curve* make_curve(PatternCurve&& c, const char* x_name, const char* y_name,
                      std::string title) {
    auto* out = new ifo_curve;
    out->curve = std::move(c);
    out->x_name = x_name;
    out->y_name = y_name;
    out->title = std::move(title);
    return out;
}

}  // namespace

extern "C" {

const char* ifo_version(void) { return "0.1.0"; }

const char* ifo_status_name(ifo_status status) {
    switch (status) {
        case IFO_OK: return "ok";
        case IFO_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case IFO_ERR_DOMAIN: return "domain_error";
        case IFO_ERR_NYQUIST: return "nyquist_violation";
        case IFO_ERR_NO_CONVERGENCE: return "no_convergence";
        case IFO_ERR_NOT_IDENTIFIABLE: return "not_identifiable";
        case IFO_ERR_IO: return "io_error";
        case IFO_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* ifo_last_error(void) { return t_last_error.c_str(); }

ifo_status ifo_spectral_config_new(int n_modes, double mode_spacing,
                                   double mode_width, double center_frequency,
                                   ifo_spectral_config** out) {
    if (auto s = require(out != nullptr, "out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        SpectralModeConfig cfg{n_modes, mode_spacing, mode_width, center_frequency};
        cfg.validate();
        *out = new ifo_spectral_config{cfg};
    });
}

void ifo_spectral_config_free(ifo_spectral_config* config) { delete config; }

ifo_status ifo_spectrum_config_new(int n_modes, double mode_spacing,
                                   double mode_width, double center_frequency,
                                   ifo_spectrum_config** out) {
    if (auto s = require(out != nullptr, "out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        SingleSpectrumConfig cfg{n_modes, mode_spacing, mode_width, center_frequency};
        cfg.validate();
        *out = new ifo_spectrum_config{cfg};
    });
}

void ifo_spectrum_config_free(ifo_spectrum_config* config) { delete config; }

ifo_status ifo_slit_config_new(int n_slits, double slit_width, double slit_pitch,
                               double wavelength, ifo_slit_config** out) {
    if (auto s = require(out != nullptr, "out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        SlitConfig cfg{n_slits, slit_width, slit_pitch, wavelength};
        cfg.validate();
        *out = new ifo_slit_config{cfg};
    });
}

void ifo_slit_config_free(ifo_slit_config* config) { delete config; }

ifo_status ifo_details_factor(int n_modes, double x, double* out) {
    if (auto s = require(out != nullptr, "out must not be NULL")) return s;
    return guarded([&] { *out = details_factor(n_modes, x); });
}

ifo_status ifo_jsa_value(const ifo_spectral_config* config, double w1, double w2,
                         ifo_correlation correlation, double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] {
        *out = jsa_value(config->cfg, w1, w2,
                         correlation == IFO_CORRELATED ? Correlation::correlated
                                                       : Correlation::anti_correlated);
    });
}

ifo_status ifo_homi_probability(const ifo_spectral_config* config, double tau,
                                double* probability, double* envelope,
                                double* details) {
    if (auto s = require(config && probability, "config and probability must not be NULL"))
        return s;
    return guarded([&] {
        const auto r = homi::probability(config->cfg, tau);
        *probability = r.probability;
        if (envelope) *envelope = r.envelope;
        if (details) *details = r.details;
    });
}

ifo_status ifo_mzi_probability(const ifo_spectrum_config* config, double tau,
                               double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] { *out = mzi::probability(config->cfg, tau); });
}

ifo_status ifo_noon_probability(const ifo_spectral_config* config, double tau,
                                double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] { *out = noon::probability(config->cfg, tau); });
}

ifo_status ifo_msi_intensity(const ifo_slit_config* config, double sin_theta,
                             double* intensity, double* u, double* v) {
    if (auto s = require(config && intensity, "config and intensity must not be NULL"))
        return s;
    return guarded([&] {
        const auto p = msi::intensity(config->cfg, sin_theta);
        *intensity = p.intensity;
        if (u) *u = p.u;
        if (v) *v = p.v;
    });
}

ifo_status ifo_cross_term_weight(const ifo_spectral_config* config, double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] { *out = oracle::cross_term_weight(config->cfg); });
}

ifo_status ifo_homi_pattern(const ifo_spectral_config* config, double tau_min,
                            double tau_max, int n_samples, ifo_curve** out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        *out = make_curve(homi::pattern(config->cfg, tau_min, tau_max, n_samples),
                          "tau_ps", "coincidence_probability", "HOM pattern");
    });
}

ifo_status ifo_mzi_pattern(const ifo_spectrum_config* config, double tau_min,
                           double tau_max, int n_samples, ifo_curve** out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        *out = make_curve(mzi::pattern(config->cfg, tau_min, tau_max, n_samples),
                          "tau_ps", "count_probability", "Mach-Zehnder pattern");
    });
}

ifo_status ifo_noon_pattern(const ifo_spectral_config* config, double tau_min,
                            double tau_max, int n_samples, ifo_curve** out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        *out = make_curve(noon::pattern(config->cfg, tau_min, tau_max, n_samples),
                          "tau_ps", "coincidence_probability", "NOON pattern");
    });
}

ifo_status ifo_msi_pattern(const ifo_slit_config* config, double sin_theta_min,
                           double sin_theta_max, int n_samples, ifo_curve** out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        *out = make_curve(
            msi::pattern(config->cfg, sin_theta_min, sin_theta_max, n_samples),
            "sin_theta", "intensity", "multi-slit pattern");
    });
}

ifo_status ifo_fisher_curve(const ifo_spectral_config* config, double tau_min,
                            double tau_max, int n_samples, ifo_curve** out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        const auto fc = fisher::curve(config->cfg, tau_min, tau_max, n_samples);
        PatternCurve c;
        c.abscissa = fc.tau_grid;
        c.values = fc.fi_values;
        c.family = Family::homi;  // carries the generating spectral config
        c.config_snapshot = fc.config;
        c.metadata.emplace_back("content", "fisher_information");
        *out = make_curve(std::move(c), "tau_ps", "fisher_information_per_ps2",
                          "Fisher information");
    });
}

ifo_status ifo_curve_size(const ifo_curve* curve, size_t* out) {
    if (auto s = require(curve && out, "curve and out must not be NULL")) return s;
    *out = curve->curve.abscissa.size();
    return IFO_OK;
}

ifo_status ifo_curve_copy(const ifo_curve* curve, double* xs, double* ys,
                          size_t capacity) {
    if (auto s = require(curve != nullptr, "curve must not be NULL")) return s;
    const auto& c = curve->curve;
    const size_t n = std::min(capacity, c.abscissa.size());
    for (size_t i = 0; i < n; ++i) {
        if (xs) xs[i] = c.abscissa[i];
        if (ys) ys[i] = c.values[i];
    }
    return IFO_OK;
}

ifo_status ifo_curve_write_csv(const ifo_curve* curve, const char* path) {
    if (auto s = require(curve && path, "curve and path must not be NULL")) return s;
    return guarded(
        [&] { io::write_curve_csv(path, curve->curve, curve->x_name, curve->y_name); });
}

ifo_status ifo_curve_write_svg(const ifo_curve* curve, const char* path,
                               const char* title) {
    if (auto s = require(curve && path, "curve and path must not be NULL")) return s;
    return guarded([&] {
        svg::write_line_plot(path, curve->curve.abscissa, curve->curve.values,
                             {title ? title : curve->title, curve->x_name,
                              curve->y_name});
    });
}

void ifo_curve_free(ifo_curve* curve) { delete curve; }

ifo_status ifo_oracle_homi(const ifo_spectral_config* config, double tau,
                           double truncation_sigmas, int points_per_mode,
                           double rel_tolerance, double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] {
        *out = oracle::coincidence_numeric(
            config->cfg, tau, make_spec(truncation_sigmas, points_per_mode, rel_tolerance));
    });
}

ifo_status ifo_oracle_mzi(const ifo_spectrum_config* config, double tau,
                          double truncation_sigmas, int points_per_mode,
                          double rel_tolerance, double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] {
        *out = oracle::mzi_numeric(
            config->cfg, tau, make_spec(truncation_sigmas, points_per_mode, rel_tolerance));
    });
}

ifo_status ifo_oracle_noon(const ifo_spectral_config* config, double tau,
                           double truncation_sigmas, int points_per_mode,
                           double rel_tolerance, double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] {
        *out = oracle::noon_numeric(
            config->cfg, tau, make_spec(truncation_sigmas, points_per_mode, rel_tolerance));
    });
}

ifo_status ifo_envelope1d_load(const char* path, ifo_envelope1d** out) {
    if (auto s = require(path && out, "path and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] { *out = new ifo_envelope1d{io::load_envelope_1d(path)}; });
}

void ifo_envelope1d_free(ifo_envelope1d* envelope) { delete envelope; }

ifo_status ifo_envelope2d_load(const char* path, ifo_envelope2d** out) {
    if (auto s = require(path && out, "path and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] { *out = new ifo_envelope2d{io::load_envelope_2d(path)}; });
}

void ifo_envelope2d_free(ifo_envelope2d* envelope) { delete envelope; }

ifo_status ifo_oracle_homi_tabulated(const ifo_spectral_config* config,
                                     const ifo_envelope2d* envelope, double tau,
                                     double truncation_sigmas, int points_per_mode,
                                     double rel_tolerance, double* out) {
    if (auto s = require(config && envelope && out,
                         "config, envelope and out must not be NULL"))
        return s;
    return guarded([&] {
        *out = oracle::coincidence_numeric(
            config->cfg, envelope->env.as_envelope(), tau,
            make_spec(truncation_sigmas, points_per_mode, rel_tolerance));
    });
}

ifo_status ifo_oracle_mzi_tabulated(const ifo_spectrum_config* config,
                                    const ifo_envelope1d* envelope, double tau,
                                    double truncation_sigmas, int points_per_mode,
                                    double rel_tolerance, double* out) {
    if (auto s = require(config && envelope && out,
                         "config, envelope and out must not be NULL"))
        return s;
    return guarded([&] {
        *out = oracle::mzi_numeric(
            config->cfg, envelope->env.as_envelope(), tau,
            make_spec(truncation_sigmas, points_per_mode, rel_tolerance));
    });
}

ifo_status ifo_oracle_noon_tabulated(const ifo_spectral_config* config,
                                     const ifo_envelope2d* envelope, double tau,
                                     double truncation_sigmas, int points_per_mode,
                                     double rel_tolerance, double* out) {
    if (auto s = require(config && envelope && out,
                         "config, envelope and out must not be NULL"))
        return s;
    return guarded([&] {
        *out = oracle::noon_numeric(
            config->cfg, envelope->env.as_envelope(), tau,
            make_spec(truncation_sigmas, points_per_mode, rel_tolerance));
    });
}

ifo_status ifo_difference_frequency_projection(const ifo_spectral_config* config,
                                               double omega_minus_min,
                                               double omega_minus_max,
                                               int n_samples, ifo_curve** out,
                                               int* support_clipped) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    *out = nullptr;
    return guarded([&] {
        const auto grid = linspace(omega_minus_min, omega_minus_max, n_samples);
        auto proj = oracle::difference_frequency_projection(config->cfg, grid);
        if (support_clipped) *support_clipped = proj.support_clipped ? 1 : 0;
        PatternCurve c;
        c.abscissa = std::move(proj.grid);
        c.values = std::move(proj.values);
        c.family = Family::homi;
        c.config_snapshot = config->cfg;
        c.metadata.emplace_back("content", "difference_frequency_projection");
        *out = make_curve(std::move(c), "omega_minus_rad_per_ps", "density",
                          "difference-frequency projection");
    });
}

ifo_status ifo_envelope_via_fourier(const double* omega_grid,
                                    const double* projection, size_t n_samples,
                                    const double* taus, size_t n_taus,
                                    double* out) {
    if (auto s = require(omega_grid && projection && taus && out,
                         "all array arguments must be non-NULL"))
        return s;
    return guarded([&] {
        const auto env = homi::envelope_via_fourier(
            {omega_grid, n_samples}, {projection, n_samples}, {taus, n_taus});
        std::memcpy(out, env.data(), n_taus * sizeof(double));
    });
}

ifo_status ifo_fisher_closed_form(const ifo_spectral_config* config, double tau,
                                  double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] { *out = fisher::closed_form(config->cfg, tau); });
}

ifo_status ifo_fisher_numeric(const ifo_spectral_config* config, double tau,
                              double step, double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] {
        const auto cfg = config->cfg;
        *out = fisher::numeric(
            [cfg](double t) { return homi::probability(cfg, t).probability; }, tau,
            step > 0.0 ? step : 1e-4);
    });
}

ifo_status ifo_max_fisher(const ifo_spectral_config* config, double window_lo,
                          double window_hi, double* tau_star, double* fi_max,
                          int* on_boundary) {
    if (auto s = require(config && tau_star && fi_max,
                         "config, tau_star and fi_max must not be NULL"))
        return s;
    return guarded([&] {
        const auto r = window_hi > window_lo
                           ? fisher::find_max(config->cfg, window_lo, window_hi)
                           : fisher::find_max(config->cfg);
        *tau_star = r.tau_star;
        *fi_max = r.fi_max;
        if (on_boundary) *on_boundary = r.on_boundary ? 1 : 0;
    });
}

ifo_status ifo_sqrt_fi_linear_fit(double mode_spacing, double mode_width,
                                  int n_min, int n_max, double* slope,
                                  double* intercept, double* r_squared) {
    if (auto s = require(slope && intercept && r_squared,
                         "slope, intercept and r_squared must not be NULL"))
        return s;
    return guarded([&] {
        const auto fit = fisher::sqrt_fi_linear_fit(mode_spacing, mode_width, n_min, n_max);
        *slope = fit.slope;
        *intercept = fit.intercept;
        *r_squared = fit.r_squared;
    });
}

ifo_status ifo_identifiable_operating_point(const ifo_spectral_config* config,
                                            int num_measurements, double* out) {
    if (auto s = require(config && out, "config and out must not be NULL")) return s;
    return guarded([&] {
        *out = fisher::identifiable_operating_point(config->cfg, num_measurements);
    });
}

ifo_status ifo_crlb_monte_carlo(const ifo_spectral_config* config, double true_tau,
                                int num_measurements, int num_trials, uint64_t seed,
                                double* estimator_sd, double* crlb_sd,
                                double* mean_estimate) {
    if (auto s = require(config && estimator_sd && crlb_sd,
                         "config, estimator_sd and crlb_sd must not be NULL"))
        return s;
    return guarded([&] {
        const auto rep = fisher::crlb_monte_carlo(config->cfg, true_tau,
                                                  num_measurements, num_trials, seed);
        *estimator_sd = rep.estimator_sd;
        *crlb_sd = rep.crlb_sd;
        if (mean_estimate) *mean_estimate = rep.mean_estimate;
    });
}

ifo_status ifo_run_figure(const char* figure_id, const char* out_dir,
                          const char* formats, int* n_files) {
    if (auto s = require(figure_id && out_dir, "figure_id and out_dir must not be NULL"))
        return s;
    return guarded([&] {
        figures::Options opt;
        opt.out_dir = out_dir;
        if (formats && *formats) {
            const std::string f = formats;
            opt.csv = f.find("csv") != std::string::npos;
            opt.svg = f.find("svg") != std::string::npos;
            opt.json = f.find("json") != std::string::npos;
            if (!opt.csv && !opt.svg && !opt.json)
                throw std::invalid_argument("formats must name at least one of csv,svg,json");
        }
        const auto files = figures::run_figure(figures::figure_from_string(figure_id), opt);
        if (n_files) *n_files = static_cast<int>(files.size());
    });
}

ifo_status ifo_run_validate(const char* profile, char** json_out, int* all_pass) {
    if (auto s = require(json_out != nullptr, "json_out must not be NULL")) return s;
    *json_out = nullptr;
    return guarded([&] {
        const auto report =
            validate::run(validate::profile_from_string(profile ? profile : "default"));
        const std::string json = report.to_json();
        char* buf = static_cast<char*>(std::malloc(json.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, json.c_str(), json.size() + 1);
        *json_out = buf;
        if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
    });
}

void ifo_string_free(char* s) { std::free(s); }

}  // extern "C"
