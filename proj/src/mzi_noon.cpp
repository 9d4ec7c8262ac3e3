#include "interfero/mzi_noon.hpp"

#include <cmath>

namespace interfero::mzi {

double probability(const SingleSpectrumConfig& config, double tau_ps) {
    config.validate();
    const double n = static_cast<double>(config.n_modes);
    const double gt = config.mode_width * tau_ps;
    const double env = std::exp(-gt * gt / 8.0);
    const double details = details_factor(config.n_modes, config.mode_spacing * tau_ps);
    const double carrier = std::cos(config.center_frequency * tau_ps);
    return 0.5 * (1.0 + env * (details / n) * carrier);
}

PatternCurve pattern(const SingleSpectrumConfig& config, double tau_min,
                     double tau_max, int n_samples) {
    config.validate();
    PatternCurve curve;
    curve.abscissa = linspace(tau_min, tau_max, n_samples);
    curve.values.reserve(curve.abscissa.size());
    for (double t : curve.abscissa) curve.values.push_back(probability(config, t));
    curve.family = Family::mzi;
    curve.config_snapshot = config;
    curve.validate();
    return curve;
}

}  // namespace interfero::mzi

namespace interfero::noon {

double probability(const SpectralModeConfig& config, double tau_ps) {
    config.validate();
    const double n = static_cast<double>(config.n_modes);
    const double gt = config.mode_width * tau_ps;
    const double env = std::exp(-0.25 * gt * gt);
    const double details = details_factor(config.n_modes, 2.0 * config.mode_spacing * tau_ps);
    const double carrier = std::cos(2.0 * config.center_frequency * tau_ps);
    return 0.5 * (1.0 + env * (details / n) * carrier);
}

PatternCurve pattern(const SpectralModeConfig& config, double tau_min,
                     double tau_max, int n_samples) {
    config.validate();
    PatternCurve curve;
    curve.abscissa = linspace(tau_min, tau_max, n_samples);
    curve.values.reserve(curve.abscissa.size());
    for (double t : curve.abscissa) curve.values.push_back(probability(config, t));
    curve.family = Family::noon;
    curve.config_snapshot = config;
    curve.validate();
    return curve;
}

}  // namespace interfero::noon
