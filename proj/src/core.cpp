#include "interfero/core.hpp"

#include <algorithm>
#include <cmath>

namespace interfero {

void SpectralModeConfig::validate() const {
    if (n_modes < 1)
        throw std::invalid_argument("SpectralModeConfig: n_modes must be >= 1");
    if (!(mode_spacing > 0.0))
        throw std::invalid_argument("SpectralModeConfig: mode_spacing must be > 0");
    if (!(mode_width > 0.0))
        throw std::invalid_argument("SpectralModeConfig: mode_width must be > 0");
    if (!(center_frequency >= 0.0))
        throw std::invalid_argument("SpectralModeConfig: center_frequency must be >= 0");
}

void SingleSpectrumConfig::validate() const {
    if (n_modes < 1)
        throw std::invalid_argument("SingleSpectrumConfig: n_modes must be >= 1");
    if (!(mode_spacing > 0.0))
        throw std::invalid_argument("SingleSpectrumConfig: mode_spacing must be > 0");
    if (!(mode_width > 0.0))
        throw std::invalid_argument("SingleSpectrumConfig: mode_width must be > 0");
    if (!(center_frequency >= 0.0))
        throw std::invalid_argument("SingleSpectrumConfig: center_frequency must be >= 0");
}

void SlitConfig::validate() const {
    if (n_slits < 1)
        throw std::invalid_argument("SlitConfig: n_slits must be >= 1");
    if (!(slit_width > 0.0))
        throw std::invalid_argument("SlitConfig: slit_width must be > 0");
    if (!(slit_width < slit_pitch))
        throw std::invalid_argument("SlitConfig: slit_width must be < slit_pitch");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("SlitConfig: wavelength must be > 0");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::homi: return "homi";
        case Family::msi: return "msi";
        case Family::mzi: return "mzi";
        case Family::noon: return "noon";
    }
    return "unknown";
}

void PatternCurve::validate() const {
    if (abscissa.size() != values.size())
        throw std::invalid_argument("PatternCurve: abscissa/values size mismatch");
    if (abscissa.size() < 2)
        throw std::invalid_argument("PatternCurve: need at least two samples");
    for (std::size_t i = 1; i < abscissa.size(); ++i)
        if (!(abscissa[i] > abscissa[i - 1]))
            throw std::invalid_argument("PatternCurve: abscissa must be strictly increasing");

    double lo = 0.0, hi = 1.0;
    if (family == Family::msi) {
        const auto* slits = std::get_if<SlitConfig>(&config_snapshot);
        if (!slits)
            throw std::invalid_argument("PatternCurve: msi curve needs a SlitConfig snapshot");
        const double n = static_cast<double>(slits->n_slits);
        hi = n * n;
    }
    for (double v : values)
        if (!(v >= lo) || !(v <= hi))
            throw std::invalid_argument("PatternCurve: value out of range for family " +
                                        std::string(family_name(family)));
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (!(hi > lo)) throw std::invalid_argument("linspace: need lo < hi");
    if (n < 2) throw std::invalid_argument("linspace: need at least 2 samples");
    std::vector<double> g(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + step * i;
    g.back() = hi;
    return g;
}

double details_factor(int n_modes, double x) {
    if (n_modes < 1)
        throw std::invalid_argument("details_factor: n_modes must be >= 1");
    const double n = static_cast<double>(n_modes);
    const double s = std::sin(x);
    double v;
    if (std::abs(s) < 1e-6) {
        // Near x = m*pi the ratio form is 0/0; the equivalent cosine sum
        // sum_k cos((2k-N-1)x) is exact there and stable everywhere.
        double acc = 0.0;
        for (int k = 1; k <= n_modes; ++k)
            acc += std::cos(static_cast<double>(2 * k - n_modes - 1) * x);
        v = acc;
    } else {
        v = std::sin(n * x) / s;
    }
    return std::clamp(v, -n, n);
}

double jsa_value(const SpectralModeConfig& config, double w1, double w2,
                 Correlation correlation) {
    config.validate();
    const double g2 = config.mode_width * config.mode_width;
    const double w0 = config.center_frequency;
    double acc = 0.0;
    for (int k = 1; k <= config.n_modes; ++k) {
        const double off = config.mode_offset(k);
        const double d1 = w1 - w0 - off;
        const double d2 = correlation == Correlation::anti_correlated
                              ? w2 - w0 + off
                              : w2 - w0 - off;
        acc += std::exp(-(d1 * d1 + d2 * d2) / g2);
    }
    return acc;
}

}  // namespace interfero
