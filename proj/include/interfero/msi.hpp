#ifndef INTERFERO_MSI_HPP
#define INTERFERO_MSI_HPP

#include <span>
#include <vector>

#include "interfero/core.hpp"

// Fraunhofer multi-slit interference,
//   I(theta) = (sin u / u)^2 (sin N v / sin v)^2,
//   u = pi a sin(theta)/lambda, v = pi d sin(theta)/lambda,
// with the source amplitude constant set to 1.

namespace interfero::msi {

struct Point {
    double sin_theta;
    double u;          // single-slit phase, rad
    double v;          // adjacent-slit phase, rad
    double intensity;  // in [0, N^2]
};

Point intensity(const SlitConfig& config, double sin_theta);

PatternCurve pattern(const SlitConfig& config, double sin_theta_min,
                     double sin_theta_max, int n_samples);

// Fourier transform of a sampled aperture transmission function, evaluated
// at the spatial frequencies sin(theta)/lambda (1/m). A centered rectangle
// of width a gives a*sinc(pi a sin(theta)/lambda). Throws NyquistError when
// the aperture grid cannot resolve the requested frequencies.
std::vector<double> aperture_diffraction_amplitude(
    std::span<const double> x_grid, std::span<const double> aperture,
    std::span<const double> sin_theta_over_lambda);

}  // namespace interfero::msi

#endif  // INTERFERO_MSI_HPP
