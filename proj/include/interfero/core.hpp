#ifndef INTERFERO_CORE_HPP
#define INTERFERO_CORE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

// Unit convention, used everywhere in this library:
//   angular frequencies in rad/ps (equivalently rad*THz),
//   delays in ps,
//   lengths in m.
// With these units every phase argument (gamma*tau, alpha*tau, omega0*tau,
// pi*a*sin(theta)/lambda) is dimensionless with no conversion factor.

namespace interfero {

struct NyquistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdentifiabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// How the two frequency axes of a joint spectral amplitude are coupled.
enum class Correlation { anti_correlated, correlated };

/// Parameters of an N-mode Gaussian joint spectral amplitude.
struct SpectralModeConfig {
    int n_modes = 1;                 // N
    double mode_spacing = 5.0;       // alpha, rad/ps
    double mode_width = 2.0;         // gamma, rad/ps
    double center_frequency = 0.0;   // omega0, rad/ps

    void validate() const;

    // Mode k (1-based) sits at center_frequency + mode_offset(k) on the
    // first axis; the second axis mirrors or repeats it depending on the
    // correlation sign.
    double mode_offset(int k) const {
        return static_cast<double>(2 * k - n_modes - 1) * mode_spacing;
    }

    // True when the modes barely overlap and the closed forms that drop
    // cross terms are accurate.
    bool well_separated() const { return mode_width / mode_spacing <= 0.5; }
};

/// Parameters of an N-mode Gaussian single-photon spectrum (one axis).
struct SingleSpectrumConfig {
    int n_modes = 1;
    double mode_spacing = 5.0;
    double mode_width = 2.0;
    double center_frequency = 0.0;

    void validate() const;
    double mode_offset(int k) const {
        return static_cast<double>(2 * k - n_modes - 1) * mode_spacing;
    }
    bool well_separated() const { return mode_width / mode_spacing <= 0.5; }
};

/// Geometry of an N-slit aperture illuminated at wavelength lambda.
struct SlitConfig {
    int n_slits = 1;
    double slit_width = 1e-5;    // a, m
    double slit_pitch = 5e-4;    // d, m (a + block = d)
    double wavelength = 500e-9;  // lambda, m

    void validate() const;
    // Center of slit k (1-based); adjacent centers are one pitch apart.
    double slit_center(int k) const {
        return static_cast<double>(2 * k - n_slits - 1) * slit_pitch / 2.0;
    }
};

enum class Family { homi, msi, mzi, noon };

const char* family_name(Family f);

/// A sampled interference curve plus the configuration that generated it.
struct PatternCurve {
    std::vector<double> abscissa;  // tau in ps, or sin(theta)
    std::vector<double> values;
    Family family = Family::homi;
    std::variant<SpectralModeConfig, SingleSpectrumConfig, SlitConfig> config_snapshot;
    std::vector<std::pair<std::string, std::string>> metadata;

    // Throws std::invalid_argument when the abscissa is not strictly
    // increasing or a value violates the family's bound ([0,1] for the
    // probability families, [0, N^2] for MSI).
    void validate() const;
};

/// n equally spaced samples covering [lo, hi] inclusive. Requires
/// hi > lo and n >= 2.
std::vector<double> linspace(double lo, double hi, int n);

/// sin(N x)/sin(x), total over all x. The removable singularities at
/// x = m*pi evaluate exactly to N*(-1)^(m(N-1)); the result is always in
/// [-N, N].
double details_factor(int n_modes, double x);

/// Un-normalized N-mode Gaussian JSA amplitude at (w1, w2). Anti-correlated
/// placement puts mode k at (w0 + off_k, w0 - off_k), correlated at
/// (w0 + off_k, w0 + off_k).
double jsa_value(const SpectralModeConfig& config, double w1, double w2,
                 Correlation correlation);

}  // namespace interfero

#endif  // INTERFERO_CORE_HPP
