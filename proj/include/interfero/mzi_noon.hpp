#ifndef INTERFERO_MZI_NOON_HPP
#define INTERFERO_MZI_NOON_HPP

#include "interfero/core.hpp"

// Closed-form multi-mode Mach-Zehnder single counts and NOON-state
// coincidences. Both carry the same details factor as the HOM family but
// ride on a carrier: cos(omega0 tau) for the single photon, cos(2 omega0
// tau) for the two-photon NOON state.

namespace interfero::mzi {

// P(tau) = 1/2 + 1/(2N) exp(-gamma^2 tau^2/8) D_N(alpha tau) cos(omega0 tau)
double probability(const SingleSpectrumConfig& config, double tau_ps);

PatternCurve pattern(const SingleSpectrumConfig& config, double tau_min,
                     double tau_max, int n_samples);

}  // namespace interfero::mzi

namespace interfero::noon {

// P(tau) = 1/2 + 1/(2N) exp(-gamma^2 tau^2/4) D_N(2 alpha tau) cos(2 omega0 tau)
double probability(const SpectralModeConfig& config, double tau_ps);

PatternCurve pattern(const SpectralModeConfig& config, double tau_min,
                     double tau_max, int n_samples);

}  // namespace interfero::noon

#endif  // INTERFERO_MZI_NOON_HPP
