#include "interfero/homi.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "interfero/oracle.hpp"

namespace interfero::homi {

Result probability(const SpectralModeConfig& config, double tau_ps) {
    config.validate();
    const double n = static_cast<double>(config.n_modes);
    const double gt = config.mode_width * tau_ps;
    const double env = std::exp(-0.25 * gt * gt);
    const double details = details_factor(config.n_modes, 2.0 * config.mode_spacing * tau_ps);
    // |details/N| <= 1 and env <= 1 keep the probability inside [0, 1]
    // without any clamping; at tau = 0 it is exactly 0.
    const double p = 0.5 * (1.0 - env * (details / n));
    return {p, env / n, details};
}

PatternCurve pattern(const SpectralModeConfig& config, double tau_min,
                     double tau_max, int n_samples) {
    config.validate();
    PatternCurve curve;
    curve.abscissa = linspace(tau_min, tau_max, n_samples);
    curve.values.reserve(curve.abscissa.size());
    for (double t : curve.abscissa)
        curve.values.push_back(probability(config, t).probability);
    curve.family = Family::homi;
    curve.config_snapshot = config;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", closed_form_error_bound(config));
    curve.metadata.emplace_back("cross_term_weight", buf);
    curve.validate();
    return curve;
}

std::vector<double> envelope_via_fourier(std::span<const double> omega_grid,
                                         std::span<const double> projection,
                                         std::span<const double> tau_grid) {
    if (omega_grid.size() != projection.size())
        throw std::invalid_argument("envelope_via_fourier: grid/value size mismatch");
    if (omega_grid.size() < 2)
        throw std::invalid_argument("envelope_via_fourier: need at least 2 samples");
    const std::size_t n = omega_grid.size();
    const double du = (omega_grid.back() - omega_grid.front()) / static_cast<double>(n - 1);
    if (!(du > 0.0))
        throw std::invalid_argument("envelope_via_fourier: omega grid must increase");
    for (std::size_t i = 1; i < n; ++i) {
        const double expect = omega_grid.front() + du * static_cast<double>(i);
        if (std::abs(omega_grid[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
            throw std::invalid_argument("envelope_via_fourier: omega grid must be uniform");
    }

    double tau_abs_max = 0.0;
    for (double t : tau_grid) tau_abs_max = std::max(tau_abs_max, std::abs(t));
    // Two samples per oscillation of cos(omega tau) across the grid spacing.
    if (du * tau_abs_max > std::numbers::pi)
        throw NyquistError("envelope_via_fourier: omega grid too coarse for the requested delays");

    std::vector<double> out;
    out.reserve(tau_grid.size());
    for (double t : tau_grid) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool edge = i == 0 || i + 1 == n;
            acc += (edge ? 0.5 : 1.0) * projection[i] * std::cos(omega_grid[i] * t);
        }
        out.push_back(acc * du);
    }
    return out;
}

double closed_form_error_bound(const SpectralModeConfig& config) {
    return oracle::cross_term_weight(config);
}

}  // namespace interfero::homi
