#ifndef INTERFERO_FISHER_HPP
#define INTERFERO_FISHER_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "interfero/core.hpp"

// Fisher information of the HOM coincidence curve and the estimation
// machinery built on it: FI(tau) = P'(tau)^2 / (P(tau)(1 - P(tau))) for a
// binary-outcome measurement, the closed form derived from the multi-mode
// pattern, maximum search, the sqrt(FI)-vs-N scaling fit, and a
// Cramer-Rao Monte Carlo study.

namespace interfero::fisher {

struct FisherCurve {
    std::vector<double> tau_grid;   // ps
    std::vector<double> fi_values;  // 1/ps^2, all finite and >= 0
    SpectralModeConfig config;
};

struct MaxResult {
    double tau_star = 0.0;
    double fi_max = 0.0;
    bool on_boundary = false;  // maximum pinned at a window edge
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

struct CrlbReport {
    double true_tau = 0.0;
    int num_trials = 0;
    int num_measurements = 0;  // Bernoulli draws per trial
    std::uint64_t seed = 0;
    double mean_estimate = 0.0;
    double estimator_sd = 0.0;  // ps, spread of the per-trial ML estimates
    double crlb_sd = 0.0;       // ps, 1/sqrt(num_measurements * FI(true_tau))
};

// Closed form for the multi-mode Gaussian pattern; finite everywhere, the
// removable singularities at tau = 0 and sin(2 alpha tau) = 0 are evaluated
// through the finite-difference limit.
double closed_form(const SpectralModeConfig& config, double tau_ps);

// FI from any probability curve via a five-point central difference (the
// Richardson-extrapolated derivative). When P(1-P) vanishes at tau the
// value is the one-sided limit and *degenerate is set.
double numeric(const std::function<double(double)>& p_of_tau, double tau_ps,
               double step_ps = 1e-4, bool* degenerate = nullptr);

FisherCurve curve(const SpectralModeConfig& config, double tau_min,
                  double tau_max, int n_samples);

// Global maximum over [window_lo, window_hi]: dense scan (step fine enough
// for the narrowest peaks) plus golden-section refinement. The overload
// without a window uses [0, 3/gamma + pi/(2 alpha)].
MaxResult find_max(const SpectralModeConfig& config, double window_lo,
                   double window_hi);
MaxResult find_max(const SpectralModeConfig& config);

// (N, sqrt(max FI)) for N in [n_min, n_max] at fixed alpha/gamma.
std::vector<std::pair<int, double>> sqrt_fi_scan(double alpha, double gamma,
                                                 int n_min, int n_max);

// Ordinary least squares of sqrt(max FI) against N. Rejects ranges with
// fewer than two points.
LinearFit sqrt_fi_linear_fit(double alpha, double gamma, int n_min, int n_max);

// Delay with the largest FI among points where a num_measurements-shot
// experiment is statistically regular (both outcomes expected at least
// min_expected_counts times). The unconstrained FI supremum can sit at the
// dip bottom where P = 0 and no estimate exists; this is the operating
// point a delay-estimation run would actually use.
double identifiable_operating_point(const SpectralModeConfig& config,
                                    int num_measurements,
                                    double min_expected_counts = 100.0);

// Simulates num_trials delay estimations, each inverting the pattern over
// its local monotone branch from num_measurements Bernoulli outcomes.
// Deterministic for a fixed seed.
CrlbReport crlb_monte_carlo(const SpectralModeConfig& config, double true_tau,
                            int num_measurements, int num_trials,
                            std::uint64_t seed);

}  // namespace interfero::fisher

#endif  // INTERFERO_FISHER_HPP
