#ifndef INTERFERO_ANALYSIS_HPP
#define INTERFERO_ANALYSIS_HPP

#include <span>

#include "interfero/core.hpp"

// Structure-count and spectral measurements used to verify the sampled
// patterns against the qualitative features the closed forms predict.

namespace interfero::analysis {

// Local minima of the HOM pattern strictly between the first two adjacent
// primary valleys at tau >= 0. Valleys where the details factor sits near
// its absolute maximum (D/N > 0.6) count as primary.
int homi_secondary_valley_count(const SpectralModeConfig& config);

// Local maxima of the slit pattern strictly between the sin(theta) = 0 and
// first grating-order primary peaks.
int msi_secondary_peak_count(const SlitConfig& config);

// Local maxima of the fringe envelope 1/2 + (1/2N) exp(.) |D_N| strictly
// between its two main peaks. The carrier is stripped because the fringe
// count under the envelope depends on omega0, not on the mode structure.
int mzi_envelope_secondary_peak_count(const SingleSpectrumConfig& config);
int noon_envelope_secondary_peak_count(const SpectralModeConfig& config);

// Location (rad/ps) of the strongest line in the magnitude spectrum of a
// uniformly sampled signal: Hann window, zero-padded FFT, parabolic
// interpolation around the peak bin. The DC bin is excluded.
double dominant_frequency(std::span<const double> values, double dt);

struct SideLobe {
    double tau = 0.0;   // position of the lobe's tallest sample
    double fi = 0.0;    // its Fisher information
};

// Side-lobe structure of the Fisher-information curve: local maxima beyond
// the first off-center zero of FI (the removable singular point at tau = 0
// carries the finite limit value but is not a flanking feature), clustered
// within pi/(4 alpha) so the two walls around one pattern extremum count
// as a single lobe. Sorted by position, symmetric about zero.
std::vector<SideLobe> fisher_side_lobes(const SpectralModeConfig& config,
                                        double tau_span, int n_samples);

}  // namespace interfero::analysis

#endif  // INTERFERO_ANALYSIS_HPP
