#include "interfero/msi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace interfero::msi {

Point intensity(const SlitConfig& config, double sin_theta) {
    config.validate();
    if (!(std::abs(sin_theta) <= 1.0))
        throw std::domain_error("msi: |sin_theta| must be <= 1");
    const double u = std::numbers::pi * config.slit_width * sin_theta / config.wavelength;
    const double v = std::numbers::pi * config.slit_pitch * sin_theta / config.wavelength;
    const double sinc = u == 0.0 ? 1.0 : std::clamp(std::sin(u) / u, -1.0, 1.0);
    const double d = details_factor(config.n_slits, v);
    return {sin_theta, u, v, sinc * sinc * d * d};
}

PatternCurve pattern(const SlitConfig& config, double sin_theta_min,
                     double sin_theta_max, int n_samples) {
    config.validate();
    PatternCurve curve;
    curve.abscissa = linspace(sin_theta_min, sin_theta_max, n_samples);
    curve.values.reserve(curve.abscissa.size());
    for (double s : curve.abscissa)
        curve.values.push_back(intensity(config, s).intensity);
    curve.family = Family::msi;
    curve.config_snapshot = config;
    curve.validate();
    return curve;
}

std::vector<double> aperture_diffraction_amplitude(
    std::span<const double> x_grid, std::span<const double> aperture,
    std::span<const double> sin_theta_over_lambda) {
    if (x_grid.size() != aperture.size())
        throw std::invalid_argument("aperture_diffraction_amplitude: grid/value size mismatch");
    if (x_grid.size() < 2)
        throw std::invalid_argument("aperture_diffraction_amplitude: need at least 2 samples");
    const std::size_t n = x_grid.size();
    const double dx = (x_grid.back() - x_grid.front()) / static_cast<double>(n - 1);
    if (!(dx > 0.0))
        throw std::invalid_argument("aperture_diffraction_amplitude: grid must increase");
    for (std::size_t i = 1; i < n; ++i) {
        const double expect = x_grid.front() + dx * static_cast<double>(i);
        if (std::abs(x_grid[i] - expect) > 1e-9 * std::max(std::abs(expect), dx))
            throw std::invalid_argument("aperture_diffraction_amplitude: grid must be uniform");
    }

    double s_max = 0.0;
    for (double s : sin_theta_over_lambda) s_max = std::max(s_max, std::abs(s));
    if (2.0 * std::numbers::pi * dx * s_max > std::numbers::pi)
        throw NyquistError("aperture_diffraction_amplitude: aperture grid too coarse for the requested frequencies");

    std::vector<double> out;
    out.reserve(sin_theta_over_lambda.size());
    for (double s : sin_theta_over_lambda) {
        const double k = 2.0 * std::numbers::pi * s;
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool edge = i == 0 || i + 1 == n;
            acc += (edge ? 0.5 : 1.0) * aperture[i] * std::cos(k * x_grid[i]);
        }
        out.push_back(acc * dx);
    }
    return out;
}

}  // namespace interfero::msi
