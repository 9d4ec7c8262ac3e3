#ifndef INTERFERO_HOMI_HPP
#define INTERFERO_HOMI_HPP

#include <span>
#include <vector>

#include "interfero/core.hpp"

// Closed-form multi-mode Hong-Ou-Mandel coincidence probability
//   P(tau) = 1/2 [1 - P0(tau) * sin(2 N alpha tau)/sin(2 alpha tau)],
//   P0(tau) = exp(-gamma^2 tau^2 / 4) / N,
// exact in the well-separated regime (cross terms dropped); see
// closed_form_error_bound for how much that costs at a given config.

namespace interfero::homi {

struct Result {
    double probability;  // P(tau), in [0, 1]
    double envelope;     // P0 = exp(-gamma^2 tau^2/4)/N
    double details;      // D_N(2 alpha tau)
};

Result probability(const SpectralModeConfig& config, double tau_ps);

PatternCurve pattern(const SpectralModeConfig& config, double tau_min,
                     double tau_max, int n_samples);

// Real part of the Fourier transform of a sampled difference-frequency
// distribution, evaluated on tau_grid. With the unit-normalized projection
// of the full |f|^2 this reproduces 1 - 2 P(tau); a single-mode Gaussian
// projection gives exp(-gamma^2 tau^2/4). Throws NyquistError when the
// omega grid is too coarse for the requested delays.
std::vector<double> envelope_via_fourier(std::span<const double> omega_grid,
                                         std::span<const double> projection,
                                         std::span<const double> tau_grid);

// Integrated cross-term weight of the config (dropping cross terms is the
// only approximation in the closed form). Thin wrapper over the oracle's
// gauge so callers of this module can judge validity without reaching into
// the oracle.
double closed_form_error_bound(const SpectralModeConfig& config);

}  // namespace interfero::homi

#endif  // INTERFERO_HOMI_HPP
