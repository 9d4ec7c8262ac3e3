#ifndef INTERFERO_EXTREMA_HPP
#define INTERFERO_EXTREMA_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace interfero {

struct ExtremumPoint {
    std::size_t index = 0;
    double x = 0.0;
    double value = 0.0;
};

// Strict local minima of a sampled curve, filtered by prominence: the
// smaller of the rises seen while walking left/right from the candidate
// until a sample below it appears (curve ends count as walls). The
// threshold rejects floating-point plateaus on analytically flat stretches.
std::vector<ExtremumPoint> local_minima(std::span<const double> x,
                                        std::span<const double> v,
                                        double min_prominence);

std::vector<ExtremumPoint> local_maxima(std::span<const double> x,
                                        std::span<const double> v,
                                        double min_prominence);

}  // namespace interfero

#endif  // INTERFERO_EXTREMA_HPP
