#include "interfero/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <mutex>
#include <numbers>
#include <vector>

#include <fftw3.h>

#include "interfero/extrema.hpp"
#include "interfero/fisher.hpp"
#include "interfero/homi.hpp"
#include "interfero/msi.hpp"

namespace interfero::analysis {

namespace {

struct Curve {
    std::vector<double> x, v;
};

Curve sample(double lo, double hi, int n, const std::function<double(double)>& f) {
    Curve c;
    c.x = linspace(lo, hi, n);
    c.v.reserve(c.x.size());
    for (double xi : c.x) c.v.push_back(f(xi));
    return c;
}

// Count extrema of one polarity between the first two adjacent primary
// extrema at x >= 0. `is_primary(x)` decides from the details factor, so
// the classification is independent of envelope depth.
int count_between_primaries(const Curve& c, bool minima, double prominence,
                            const std::function<bool(double)>& is_primary) {
    const auto pts = minima ? local_minima(c.x, c.v, prominence)
                            : local_maxima(c.x, c.v, prominence);
    std::vector<double> primaries;
    for (const auto& p : pts)
        if (is_primary(p.x)) primaries.push_back(p.x);
    // first primary at/after the symmetric center, then the next one
    double p0 = 0.0, p1 = 0.0;
    bool have0 = false, have1 = false;
    for (double x : primaries) {
        if (x < -1e-12) continue;
        if (!have0) {
            p0 = x;
            have0 = true;
        } else {
            p1 = x;
            have1 = true;
            break;
        }
    }
    if (!have0 || !have1)
        throw std::runtime_error("structure count: fewer than two primary extrema in range");
    int n = 0;
    for (const auto& p : pts)
        if (p.x > p0 + 1e-12 && p.x < p1 - 1e-12 && !is_primary(p.x)) ++n;
    return n;
}

}  // namespace

int homi_secondary_valley_count(const SpectralModeConfig& config) {
    config.validate();
    // Adjacent primary valleys are pi/alpha apart for even N and
    // pi/(2 alpha) for odd N; a window of 1.3 pi/alpha covers both.
    const double span = 1.3 * std::numbers::pi / config.mode_spacing;
    const Curve c = sample(-0.15 * span, span, 6001, [&](double t) {
        return homi::probability(config, t).probability;
    });
    const double n = static_cast<double>(config.n_modes);
    auto primary = [&](double t) {
        return details_factor(config.n_modes, 2.0 * config.mode_spacing * t) / n > 0.6;
    };
    return count_between_primaries(c, true, 1e-6, primary);
}

int msi_secondary_peak_count(const SlitConfig& config) {
    config.validate();
    const double order = config.wavelength / config.slit_pitch;  // first grating order
    if (1.3 * order > 1.0)
        throw std::domain_error("msi_secondary_peak_count: first order lies outside |sin theta| <= 1");
    const Curve c = sample(-0.15 * order, 1.3 * order, 6001, [&](double s) {
        return msi::intensity(config, s).intensity;
    });
    const double n = static_cast<double>(config.n_slits);
    const double prominence = 1e-6 * n * n;
    auto primary = [&](double s) {
        const double v = std::numbers::pi * config.slit_pitch * s / config.wavelength;
        return std::abs(details_factor(config.n_slits, v)) / n > 0.6;
    };
    return count_between_primaries(c, false, prominence, primary);
}

int mzi_envelope_secondary_peak_count(const SingleSpectrumConfig& config) {
    config.validate();
    const double n = static_cast<double>(config.n_modes);
    const double span = 1.3 * std::numbers::pi / config.mode_spacing;
    const Curve c = sample(-0.15 * span, span, 6001, [&](double t) {
        const double env = std::exp(-config.mode_width * config.mode_width * t * t / 8.0);
        const double d = details_factor(config.n_modes, config.mode_spacing * t);
        return 0.5 + 0.5 * env * std::abs(d) / n;
    });
    auto primary = [&](double t) {
        return std::abs(details_factor(config.n_modes, config.mode_spacing * t)) / n > 0.6;
    };
    return count_between_primaries(c, false, 1e-6, primary);
}

int noon_envelope_secondary_peak_count(const SpectralModeConfig& config) {
    config.validate();
    const double n = static_cast<double>(config.n_modes);
    const double span = 1.3 * std::numbers::pi / (2.0 * config.mode_spacing);
    const Curve c = sample(-0.15 * span, span, 6001, [&](double t) {
        const double env = std::exp(-0.25 * config.mode_width * config.mode_width * t * t);
        const double d = details_factor(config.n_modes, 2.0 * config.mode_spacing * t);
        return 0.5 + 0.5 * env * std::abs(d) / n;
    });
    auto primary = [&](double t) {
        return std::abs(details_factor(config.n_modes, 2.0 * config.mode_spacing * t)) / n > 0.6;
    };
    return count_between_primaries(c, false, 1e-6, primary);
}

std::vector<SideLobe> fisher_side_lobes(const SpectralModeConfig& config,
                                        double tau_span, int n_samples) {
    config.validate();
    const auto fc = fisher::curve(config, -tau_span, tau_span, n_samples);
    double top = 0.0;
    for (double v : fc.fi_values) top = std::max(top, v);
    if (!(top > 0.0)) return {};

    // radius of the central structure: first place FI collapses toward its
    // zero at a stationary point of the pattern
    double center_radius = tau_span;
    const std::size_t mid = fc.tau_grid.size() / 2;
    for (std::size_t i = mid; i < fc.tau_grid.size(); ++i) {
        if (fc.fi_values[i] < 0.02 * top) {
            center_radius = fc.tau_grid[i];
            break;
        }
    }

    const auto raw = local_maxima(fc.tau_grid, fc.fi_values, 1e-3 * top);
    std::vector<ExtremumPoint> off_center;
    for (const auto& p : raw)
        if (std::abs(p.x) >= center_radius) off_center.push_back(p);

    // Peak-anchored clustering (tallest first) so the shallow ripples
    // between lobes cannot chain neighboring lobes together.
    std::sort(off_center.begin(), off_center.end(),
              [](const ExtremumPoint& a, const ExtremumPoint& b) {
                  return a.value > b.value;
              });
    const double merge_radius = std::numbers::pi / (4.0 * config.mode_spacing);
    std::vector<SideLobe> lobes;
    for (const auto& p : off_center) {
        bool absorbed = false;
        for (const auto& l : lobes) {
            if (std::abs(p.x - l.tau) <= merge_radius) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) lobes.push_back({p.x, p.value});
    }
    std::sort(lobes.begin(), lobes.end(),
              [](const SideLobe& a, const SideLobe& b) { return a.tau < b.tau; });
    return lobes;
}

double dominant_frequency(std::span<const double> values, double dt) {
    if (values.size() < 16)
        throw std::invalid_argument("dominant_frequency: need at least 16 samples");
    if (!(dt > 0.0))
        throw std::invalid_argument("dominant_frequency: dt must be > 0");

    const std::size_t n = values.size();
    std::size_t m = 1;
    while (m < 4 * n) m <<= 1;

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);

    std::vector<double> in(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double hann =
            0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(n - 1));
        in[i] = (values[i] - mean) * hann;
    }

    std::vector<std::complex<double>> out(m / 2 + 1);
    // the FFTW planner mutates global state; executing a plan is re-entrant
    static std::mutex planner_mutex;
    fftw_plan plan;
    {
        const std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), in.data(),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        const std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }

    std::size_t best = 1;
    double best_mag = 0.0;
    for (std::size_t k = 1; k < out.size(); ++k) {
        const double mag = std::abs(out[k]);
        if (mag > best_mag) {
            best_mag = mag;
            best = k;
        }
    }

    double refined = static_cast<double>(best);
    if (best > 1 && best + 1 < out.size()) {
        const double a = std::abs(out[best - 1]);
        const double b = best_mag;
        const double c = std::abs(out[best + 1]);
        const double denom = a - 2.0 * b + c;
        if (std::abs(denom) > 0.0) refined += 0.5 * (a - c) / denom;
    }
    return 2.0 * std::numbers::pi * refined / (static_cast<double>(m) * dt);
}

}  // namespace interfero::analysis
