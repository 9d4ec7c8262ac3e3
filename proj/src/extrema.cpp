#include "interfero/extrema.hpp"

#include <algorithm>
#include <stdexcept>

namespace interfero {

namespace {

double side_prominence(std::span<const double> v, std::size_t i, int step) {
    // Walk from i in direction `step`, tracking the running maximum, until a
    // sample drops below v[i] or the curve ends.
    double run_max = v[i];
    std::size_t j = i;
    while (true) {
        if (step < 0 && j == 0) break;
        if (step > 0 && j + 1 >= v.size()) break;
        j = step > 0 ? j + 1 : j - 1;
        if (v[j] < v[i]) break;
        run_max = std::max(run_max, v[j]);
    }
    return run_max - v[i];
}

}  // namespace

std::vector<ExtremumPoint> local_minima(std::span<const double> x,
                                        std::span<const double> v,
                                        double min_prominence) {
    if (x.size() != v.size())
        throw std::invalid_argument("local_minima: size mismatch");
    std::vector<ExtremumPoint> out;
    if (v.size() < 3) return out;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (!(v[i] < v[i - 1] && v[i] < v[i + 1])) continue;
        const double prom = std::min(side_prominence(v, i, -1),
                                     side_prominence(v, i, +1));
        if (prom >= min_prominence) out.push_back({i, x[i], v[i]});
    }
    return out;
}

std::vector<ExtremumPoint> local_maxima(std::span<const double> x,
                                        std::span<const double> v,
                                        double min_prominence) {
    std::vector<double> neg(v.begin(), v.end());
    for (double& y : neg) y = -y;
    auto mins = local_minima(x, neg, min_prominence);
    for (auto& m : mins) m.value = -m.value;
    return mins;
}

}  // namespace interfero
