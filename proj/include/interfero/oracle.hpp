#ifndef INTERFERO_ORACLE_HPP
#define INTERFERO_ORACLE_HPP

#include <functional>
#include <span>
#include <vector>

#include "interfero/core.hpp"

// Brute-force numerical evaluation of the un-approximated interference
// integrals, cross terms included. Every closed form in the library is
// validated against these evaluators; nothing here reuses the closed-form
// path.

namespace interfero::oracle {

struct QuadratureSpec {
    // Each mode cell extends truncation_sigmas * gamma / sqrt(2) from its
    // center (gamma/sqrt(2) is the amplitude-Gaussian standard deviation).
    double truncation_sigmas = 8.0;
    int points_per_mode = 64;   // Gauss-Legendre nodes per mode cell and axis
    double rel_tolerance = 1e-8;

    void validate() const;
};

// Single-mode envelope supplied as a callable plus support half-widths
// beyond which it is treated as zero.
struct Envelope1D {
    std::function<double(double)> f;
    double half_width = 0.0;
};

struct Envelope2D {
    std::function<double(double, double)> f;
    double half_width_1 = 0.0;
    double half_width_2 = 0.0;
};

// Envelope tabulated on a uniform grid; evaluates by linear interpolation
// and vanishes outside the tabulated range.
class TabulatedEnvelope1D {
  public:
    TabulatedEnvelope1D(double u_min, double u_max, std::vector<double> values);
    double operator()(double u) const;
    double u_min() const { return u_min_; }
    double u_max() const { return u_max_; }
    std::size_t size() const { return values_.size(); }
    Envelope1D as_envelope() const;

  private:
    double u_min_, u_max_, du_;
    std::vector<double> values_;
};

// values are row-major: values[j * nu + i] = f0(u_i, v_j).
class TabulatedEnvelope2D {
  public:
    TabulatedEnvelope2D(double u_min, double u_max, int nu,
                        double v_min, double v_max, int nv,
                        std::vector<double> values);
    double operator()(double u, double v) const;
    double u_min() const { return u_min_; }
    double u_max() const { return u_max_; }
    double v_min() const { return v_min_; }
    double v_max() const { return v_max_; }
    int nu() const { return nu_; }
    int nv() const { return nv_; }
    Envelope2D as_envelope() const;

  private:
    double u_min_, u_max_, v_min_, v_max_, du_, dv_;
    int nu_, nv_;
    std::vector<double> values_;
};

// --- HOM coincidence, full double integral over |f|^2 cos((w1-w2) tau) ---
double coincidence_numeric(const SpectralModeConfig& config, double tau,
                           const QuadratureSpec& spec = {});
std::vector<double> coincidence_numeric_curve(const SpectralModeConfig& config,
                                              std::span<const double> taus,
                                              const QuadratureSpec& spec = {});
double coincidence_numeric(const SpectralModeConfig& config, const Envelope2D& f0,
                           double tau, const QuadratureSpec& spec = {});
std::vector<double> coincidence_numeric_curve(const SpectralModeConfig& config,
                                              const Envelope2D& f0,
                                              std::span<const double> taus,
                                              const QuadratureSpec& spec = {});

// --- Mach-Zehnder single counts, 1-D integral over |f|^2 cos(w tau) ---
double mzi_numeric(const SingleSpectrumConfig& config, double tau,
                   const QuadratureSpec& spec = {});
std::vector<double> mzi_numeric_curve(const SingleSpectrumConfig& config,
                                      std::span<const double> taus,
                                      const QuadratureSpec& spec = {});
double mzi_numeric(const SingleSpectrumConfig& config, const Envelope1D& f0,
                   double tau, const QuadratureSpec& spec = {});
std::vector<double> mzi_numeric_curve(const SingleSpectrumConfig& config,
                                      const Envelope1D& f0,
                                      std::span<const double> taus,
                                      const QuadratureSpec& spec = {});

// --- NOON coincidences, double integral over |f|^2 cos((w1+w2) tau),
//     frequency-correlated mode placement ---
double noon_numeric(const SpectralModeConfig& config, double tau,
                    const QuadratureSpec& spec = {});
std::vector<double> noon_numeric_curve(const SpectralModeConfig& config,
                                       std::span<const double> taus,
                                       const QuadratureSpec& spec = {});
double noon_numeric(const SpectralModeConfig& config, const Envelope2D& f0,
                    double tau, const QuadratureSpec& spec = {});
std::vector<double> noon_numeric_curve(const SpectralModeConfig& config,
                                       const Envelope2D& f0,
                                       std::span<const double> taus,
                                       const QuadratureSpec& spec = {});

// Integrated off-diagonal vs diagonal weight of the squared multi-mode
// spectrum along one frequency axis:
//   sum_{j != k} exp(-2 (j-k)^2 alpha^2 / gamma^2) / N,
// 0 for a single mode. Gauges how badly the closed forms' dropped cross
// terms matter for a given config.
double cross_term_weight(const SpectralModeConfig& config);

struct SampledProjection {
    std::vector<double> grid;    // uniform
    std::vector<double> values;  // normalized to unit trapezoid integral
    bool support_clipped = false;
};

// Marginal of the normalized |f|^2 along omega_1 + omega_2, sampled on the
// given omega_- = omega_1 - omega_2 grid (anti-correlated placement).
SampledProjection difference_frequency_projection(const SpectralModeConfig& config,
                                                  std::span<const double> omega_minus_grid,
                                                  const QuadratureSpec& spec = {});

// Marginal along omega_1 - omega_2, sampled on the omega_+ grid
// (frequency-correlated placement, the NOON analogue).
SampledProjection sum_frequency_projection(const SpectralModeConfig& config,
                                           std::span<const double> omega_plus_grid,
                                           const QuadratureSpec& spec = {});

}  // namespace interfero::oracle

#endif  // INTERFERO_ORACLE_HPP
