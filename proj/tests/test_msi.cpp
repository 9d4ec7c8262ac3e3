#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "interfero/analysis.hpp"
#include "interfero/extrema.hpp"
#include "interfero/msi.hpp"
#include "test_common.hpp"

using namespace interfero;
using std::numbers::pi;

namespace {

// Independent route: direct phasor addition of the N slit fields,
// E_i with phase steps delta = 2 pi d sin(theta)/lambda, under the
// single-slit envelope.
double phasor_intensity(const SlitConfig& c, double sin_theta) {
    const double delta = 2.0 * pi * c.slit_pitch * sin_theta / c.wavelength;
    std::complex<double> sum = 0.0;
    for (int i = 0; i < c.n_slits; ++i)
        sum += std::exp(std::complex<double>(0.0, i * delta));
    const double u = pi * c.slit_width * sin_theta / c.wavelength;
    const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
    return std::norm(sum) * sinc * sinc;
}

}  // namespace

TEST_CASE("msi intensity at normal incidence is N^2") {
    for (int n : {1, 2, 4, 7}) {
        const SlitConfig c{n, 1e-5, 5e-4, 500e-9};
        CHECK(msi::intensity(c, 0.0).intensity == static_cast<double>(n) * n);
    }
}

TEST_CASE("single-slit diffraction zero at sin(theta) = lambda/a") {
    const SlitConfig c{1, 1e-5, 5e-4, 500e-9};
    const double s = c.wavelength / c.slit_width;  // 0.05
    CHECK(msi::intensity(c, s).intensity < 1e-25);
}

TEST_CASE("msi phase bookkeeping") {
    const SlitConfig c{4, 1e-5, 5e-4, 500e-9};
    const auto p = msi::intensity(c, 5e-4);
    CHECK(std::abs(p.u - pi * c.slit_width * 5e-4 / c.wavelength) < 1e-12);
    CHECK(std::abs(p.v - pi * c.slit_pitch * 5e-4 / c.wavelength) < 1e-12);
}

TEST_CASE("msi equals the direct phasor sum") {
    const SlitConfig example{4, 1e-5, 5e-4, 500e-9};
    CHECK(std::abs(msi::intensity(example, 5e-4).intensity -
                   phasor_intensity(example, 5e-4)) < 1e-10);

    TestRng rng(0x9a5);
    for (int n = 1; n <= 10; ++n) {
        const SlitConfig c{n, 1e-5, 5e-4, 500e-9};
        for (int i = 0; i < 300; ++i) {
            const double s = rng.uniform(-1.0, 1.0);
            CHECK(std::abs(msi::intensity(c, s).intensity - phasor_intensity(c, s)) < 1e-10);
        }
    }
}

TEST_CASE("msi rejects impossible angles") {
    const SlitConfig c{4, 1e-5, 5e-4, 500e-9};
    CHECK_THROWS_AS(msi::intensity(c, 1.2), std::domain_error);
    CHECK_THROWS_AS(msi::intensity(c, -1.0001), std::domain_error);
}

TEST_CASE("msi secondary-peak counts") {
    auto count = [](int n) {
        return analysis::msi_secondary_peak_count({n, 1e-5, 5e-4, 500e-9});
    };
    CHECK(count(2) == 0);
    for (int n = 3; n <= 8; ++n) CHECK(count(n) == n - 2);
}

TEST_CASE("primary maxima obey the grating equation") {
    const SlitConfig c{4, 1e-5, 5e-4, 500e-9};
    const double order = c.wavelength / c.slit_pitch;
    const auto curve = msi::pattern(c, -3.3 * order, 3.3 * order, 12001);
    const auto maxima =
        local_maxima(curve.abscissa, curve.values, 1e-6 * 16.0);
    std::vector<double> primaries;
    for (const auto& m : maxima) {
        const double v = pi * c.slit_pitch * m.x / c.wavelength;
        if (std::abs(details_factor(4, v)) / 4.0 > 0.6) primaries.push_back(m.x);
    }
    REQUIRE(primaries.size() == 7);
    for (const auto& p : primaries) {
        const double m = std::round(p / order);
        CHECK(std::abs(p - m * order) < 2.0 * (curve.abscissa[1] - curve.abscissa[0]));
    }
}

TEST_CASE("slit width narrows the envelope without moving the fringes") {
    const double d = 5e-4, lambda = 500e-9;
    const double order = lambda / d;
    double previous_falloff = 1e300;
    for (double a : {1e-4, 1.5e-4, 2e-4}) {
        const SlitConfig c{4, a, d, lambda};
        // fringe positions: first-order primary stays at lambda/d
        const auto p1 = msi::intensity(c, order).intensity;
        const auto p0 = msi::intensity(c, 0.0).intensity;
        const double u1 = pi * a * order / lambda;
        const double expected_ratio = std::pow(std::sin(u1) / u1, 2);
        CHECK(rel_diff(p1 / p0, expected_ratio) < 1e-9);
        // envelope falls off faster as the slit widens
        CHECK(p1 / p0 < previous_falloff);
        previous_falloff = p1 / p0;
        // single-slit envelope zero at sin(theta) = lambda/a, scaling as 1/a
        CHECK(msi::intensity({1, a, d, lambda}, lambda / a).intensity < 1e-20);
    }
}

TEST_CASE("pitch controls the fringe density in a fixed window") {
    const double a = 1.5e-4, lambda = 500e-9, window = 2e-3;
    int previous = 0;
    for (double d : {3e-4, 6e-4, 9e-4}) {
        const SlitConfig c{4, a, d, lambda};
        const auto curve = msi::pattern(c, -window, window, 24001);
        const auto maxima = local_maxima(curve.abscissa, curve.values, 1e-6 * 16.0);
        int primaries = 0;
        for (const auto& m : maxima) {
            const double v = pi * d * m.x / lambda;
            if (std::abs(details_factor(4, v)) / 4.0 > 0.6) ++primaries;
        }
        const int expected = 2 * static_cast<int>(std::floor(window * d / lambda)) + 1;
        CHECK(primaries == expected);
        CHECK(primaries > previous);
        previous = primaries;
    }
}

TEST_CASE("aperture transform of a centered rectangle") {
    const double a = 1e-5;
    const int n = 4001;
    const auto grid = linspace(-a, a, n);
    std::vector<double> rect(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid[i]) < 0.5 * a - 1e-12 * a) rect[i] = 1.0;
        else if (std::abs(std::abs(grid[i]) - 0.5 * a) < 1e-12 * a) rect[i] = 0.5;
    }

    const double freqs[] = {0.0, 1.0 / a, 0.37 / a};
    const auto amp = msi::aperture_diffraction_amplitude(grid, rect, freqs);
    CHECK(std::abs(amp[0] - a) < 1e-9 * a);
    CHECK(std::abs(amp[1]) < 1e-9 * a);
    const double u = pi * a * freqs[2];
    CHECK(rel_diff(amp[2], a * std::sin(u) / u) < 1e-6);
}

TEST_CASE("double-slit aperture shows cos^2 fringes of period lambda/d") {
    const double a = 1e-5, d = 5e-5;
    const int n = 8001;
    const auto grid = linspace(-2.0 * d, 2.0 * d, n);
    std::vector<double> aperture(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (double center : {-0.5 * d, 0.5 * d}) {
            const double off = std::abs(grid[i] - center);
            if (off < 0.5 * a) aperture[i] = 1.0;
        }
    }

    const auto freqs = linspace(0.0, 2.5 / d, 501);
    const auto amp = msi::aperture_diffraction_amplitude(grid, aperture, freqs);
    // phasor oracle: 2 a sinc(pi a s) cos(pi d s)
    double worst = 0.0;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        const double s = freqs[i];
        const double u = pi * a * s;
        const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
        const double expect = 2.0 * a * sinc * std::cos(pi * d * s);
        worst = std::max(worst, std::abs(amp[i] - expect));
    }
    CHECK(worst < 2e-3 * 2.0 * a);  // grid sampling of the hard edges

    // |FT|^2 vanishes at the cos^2 zeros s = (m + 1/2)/d
    const double zeros[] = {0.5 / d, 1.5 / d};
    const auto at_zeros = msi::aperture_diffraction_amplitude(grid, aperture, zeros);
    for (double v : at_zeros) CHECK(std::abs(v) < 2e-3 * 2.0 * a);
}

TEST_CASE("aperture transform rejects under-resolved frequencies") {
    const auto grid = linspace(-1.0, 1.0, 11);  // dx = 0.2
    std::vector<double> f(grid.size(), 1.0);
    const double freqs[] = {5.0};  // needs dx <= 0.1
    CHECK_THROWS_AS(msi::aperture_diffraction_amplitude(grid, f, freqs), NyquistError);
}

TEST_CASE("msi pattern bounds") {
    const SlitConfig c{5, 1e-5, 5e-4, 500e-9};
    const auto curve = msi::pattern(c, -3e-3, 3e-3, 3001);
    CHECK_NOTHROW(curve.validate());
    for (double v : curve.values) {
        CHECK(v >= 0.0);
        CHECK(v <= 25.0);
    }
}
