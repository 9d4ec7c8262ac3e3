/*
 * interfero C API: multi-mode interference patterns (Hong-Ou-Mandel,
 * multi-slit, Mach-Zehnder, NOON) with Fisher-information metrology and
 * brute-force quadrature validators.
 *
 * Conventions:
 *   - angular frequencies in rad/ps, delays in ps, lengths in m;
 *   - every function returns an ifo_status; results go through out
 *     pointers; IFO_OK means all out values are valid;
 *   - objects created by *_new / *_load are released with the matching
 *     *_free (free functions accept NULL);
 *   - on failure, ifo_last_error() returns a thread-local message.
 */

#ifndef INTERFERO_INTERFERO_H
#define INTERFERO_INTERFERO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IFO_API __declspec(dllexport)
#else
#define IFO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ifo_status {
    IFO_OK = 0,
    IFO_ERR_INVALID_ARGUMENT = 1, /* bad parameter or config */
    IFO_ERR_DOMAIN = 2,           /* input outside the physical domain */
    IFO_ERR_NYQUIST = 3,          /* sampled input too coarse for the request */
    IFO_ERR_NO_CONVERGENCE = 4,   /* quadrature refinement exhausted */
    IFO_ERR_NOT_IDENTIFIABLE = 5, /* estimation ill-posed at this point */
    IFO_ERR_IO = 6,               /* file could not be read or written */
    IFO_ERR_INTERNAL = 7
} ifo_status;

typedef enum ifo_correlation {
    IFO_ANTI_CORRELATED = 0,
    IFO_CORRELATED = 1
} ifo_correlation;

/* opaque handles */
typedef struct ifo_spectral_config ifo_spectral_config;  /* two-photon N-mode JSA */
typedef struct ifo_spectrum_config ifo_spectrum_config;  /* one-photon N-mode spectrum */
typedef struct ifo_slit_config ifo_slit_config;
typedef struct ifo_curve ifo_curve;             /* sampled x/y curve */
typedef struct ifo_envelope1d ifo_envelope1d;   /* tabulated single-mode envelope */
typedef struct ifo_envelope2d ifo_envelope2d;

IFO_API const char* ifo_version(void);
IFO_API const char* ifo_status_name(ifo_status status);
/* message of the last failure on this thread; empty string if none */
IFO_API const char* ifo_last_error(void);

/* ---- configuration objects -------------------------------------------- */

IFO_API ifo_status ifo_spectral_config_new(int n_modes, double mode_spacing,
                                           double mode_width,
                                           double center_frequency,
                                           ifo_spectral_config** out);
IFO_API void ifo_spectral_config_free(ifo_spectral_config* config);

IFO_API ifo_status ifo_spectrum_config_new(int n_modes, double mode_spacing,
                                           double mode_width,
                                           double center_frequency,
                                           ifo_spectrum_config** out);
IFO_API void ifo_spectrum_config_free(ifo_spectrum_config* config);

IFO_API ifo_status ifo_slit_config_new(int n_slits, double slit_width,
                                       double slit_pitch, double wavelength,
                                       ifo_slit_config** out);
IFO_API void ifo_slit_config_free(ifo_slit_config* config);

/* ---- point evaluators -------------------------------------------------- */

IFO_API ifo_status ifo_details_factor(int n_modes, double x, double* out);

IFO_API ifo_status ifo_jsa_value(const ifo_spectral_config* config, double w1,
                                 double w2, ifo_correlation correlation,
                                 double* out);

/* coincidence probability plus its envelope/details decomposition; the
 * envelope or details pointers may be NULL */
IFO_API ifo_status ifo_homi_probability(const ifo_spectral_config* config,
                                        double tau, double* probability,
                                        double* envelope, double* details);

IFO_API ifo_status ifo_mzi_probability(const ifo_spectrum_config* config,
                                       double tau, double* out);

IFO_API ifo_status ifo_noon_probability(const ifo_spectral_config* config,
                                        double tau, double* out);

/* u/v phase pointers may be NULL */
IFO_API ifo_status ifo_msi_intensity(const ifo_slit_config* config,
                                     double sin_theta, double* intensity,
                                     double* u, double* v);

/* integrated cross-term weight: how much the closed forms' dropped cross
 * terms matter for this config */
IFO_API ifo_status ifo_cross_term_weight(const ifo_spectral_config* config,
                                         double* out);

/* ---- sampled curves ----------------------------------------------------- */

IFO_API ifo_status ifo_homi_pattern(const ifo_spectral_config* config,
                                    double tau_min, double tau_max,
                                    int n_samples, ifo_curve** out);
IFO_API ifo_status ifo_mzi_pattern(const ifo_spectrum_config* config,
                                   double tau_min, double tau_max,
                                   int n_samples, ifo_curve** out);
IFO_API ifo_status ifo_noon_pattern(const ifo_spectral_config* config,
                                    double tau_min, double tau_max,
                                    int n_samples, ifo_curve** out);
IFO_API ifo_status ifo_msi_pattern(const ifo_slit_config* config,
                                   double sin_theta_min, double sin_theta_max,
                                   int n_samples, ifo_curve** out);
IFO_API ifo_status ifo_fisher_curve(const ifo_spectral_config* config,
                                    double tau_min, double tau_max,
                                    int n_samples, ifo_curve** out);

IFO_API ifo_status ifo_curve_size(const ifo_curve* curve, size_t* out);
/* copies min(capacity, size) points into the buffers (either may be NULL) */
IFO_API ifo_status ifo_curve_copy(const ifo_curve* curve, double* xs,
                                  double* ys, size_t capacity);
IFO_API ifo_status ifo_curve_write_csv(const ifo_curve* curve, const char* path);
IFO_API ifo_status ifo_curve_write_svg(const ifo_curve* curve, const char* path,
                                       const char* title);
IFO_API void ifo_curve_free(ifo_curve* curve);

/* ---- brute-force oracle ------------------------------------------------- */

/* quadrature controls: pass truncation_sigmas <= 0, points_per_mode <= 0 or
 * rel_tolerance <= 0 to use the defaults (8, 64, 1e-8) */
IFO_API ifo_status ifo_oracle_homi(const ifo_spectral_config* config, double tau,
                                   double truncation_sigmas, int points_per_mode,
                                   double rel_tolerance, double* out);
IFO_API ifo_status ifo_oracle_mzi(const ifo_spectrum_config* config, double tau,
                                  double truncation_sigmas, int points_per_mode,
                                  double rel_tolerance, double* out);
IFO_API ifo_status ifo_oracle_noon(const ifo_spectral_config* config, double tau,
                                   double truncation_sigmas, int points_per_mode,
                                   double rel_tolerance, double* out);

/* tabulated single-mode envelope files (see the envelope format notes in
 * the project README) */
IFO_API ifo_status ifo_envelope1d_load(const char* path, ifo_envelope1d** out);
IFO_API void ifo_envelope1d_free(ifo_envelope1d* envelope);
IFO_API ifo_status ifo_envelope2d_load(const char* path, ifo_envelope2d** out);
IFO_API void ifo_envelope2d_free(ifo_envelope2d* envelope);

IFO_API ifo_status ifo_oracle_homi_tabulated(const ifo_spectral_config* config,
                                             const ifo_envelope2d* envelope,
                                             double tau, double truncation_sigmas,
                                             int points_per_mode,
                                             double rel_tolerance, double* out);
IFO_API ifo_status ifo_oracle_mzi_tabulated(const ifo_spectrum_config* config,
                                            const ifo_envelope1d* envelope,
                                            double tau, double truncation_sigmas,
                                            int points_per_mode,
                                            double rel_tolerance, double* out);
IFO_API ifo_status ifo_oracle_noon_tabulated(const ifo_spectral_config* config,
                                             const ifo_envelope2d* envelope,
                                             double tau, double truncation_sigmas,
                                             int points_per_mode,
                                             double rel_tolerance, double* out);

/* difference-frequency marginal of the normalized joint spectral intensity,
 * sampled on n uniform points spanning [omega_minus_min, omega_minus_max];
 * support_clipped (may be NULL) is set when the grid truncates the support */
IFO_API ifo_status ifo_difference_frequency_projection(
    const ifo_spectral_config* config, double omega_minus_min,
    double omega_minus_max, int n_samples, ifo_curve** out,
    int* support_clipped);

/* real part of the Fourier transform of a sampled projection, evaluated at
 * the n_taus delays */
IFO_API ifo_status ifo_envelope_via_fourier(const double* omega_grid,
                                            const double* projection,
                                            size_t n_samples, const double* taus,
                                            size_t n_taus, double* out);

/* ---- Fisher information and metrology ----------------------------------- */

IFO_API ifo_status ifo_fisher_closed_form(const ifo_spectral_config* config,
                                          double tau, double* out);
/* FI from the difference quotient of the closed-form pattern */
IFO_API ifo_status ifo_fisher_numeric(const ifo_spectral_config* config,
                                      double tau, double step, double* out);
/* pass window_hi <= window_lo to search the default window
 * [0, 3/gamma + pi/(2 alpha)]; on_boundary (may be NULL) flags a maximum
 * pinned to a window edge */
IFO_API ifo_status ifo_max_fisher(const ifo_spectral_config* config,
                                  double window_lo, double window_hi,
                                  double* tau_star, double* fi_max,
                                  int* on_boundary);
IFO_API ifo_status ifo_sqrt_fi_linear_fit(double mode_spacing, double mode_width,
                                          int n_min, int n_max, double* slope,
                                          double* intercept, double* r_squared);
/* largest-FI delay at which a num_measurements-shot run stays regular */
IFO_API ifo_status ifo_identifiable_operating_point(
    const ifo_spectral_config* config, int num_measurements, double* out);
IFO_API ifo_status ifo_crlb_monte_carlo(const ifo_spectral_config* config,
                                        double true_tau, int num_measurements,
                                        int num_trials, uint64_t seed,
                                        double* estimator_sd, double* crlb_sd,
                                        double* mean_estimate);

/* ---- batch drivers ------------------------------------------------------ */

/* figure_id in {"fig2".."fig7"}; formats is a comma list from {csv,svg,json};
 * n_files (may be NULL) receives the number of files written */
IFO_API ifo_status ifo_run_figure(const char* figure_id, const char* out_dir,
                                  const char* formats, int* n_files);

/* profile in {"default","strict"}; *json_out receives a malloc'd report
 * (release with ifo_string_free); *all_pass (may be NULL) is 1/0 */
IFO_API ifo_status ifo_run_validate(const char* profile, char** json_out,
                                    int* all_pass);
IFO_API void ifo_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INTERFERO_INTERFERO_H */
