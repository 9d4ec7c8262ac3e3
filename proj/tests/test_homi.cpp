#include <cmath>
#include <numbers>

#include "doctest.h"
#include "interfero/analysis.hpp"
#include "interfero/extrema.hpp"
#include "interfero/homi.hpp"
#include "interfero/oracle.hpp"
#include "test_common.hpp"

using namespace interfero;
using std::numbers::pi;

TEST_CASE("homi dip at zero delay is exact for every mode number") {
    for (int n = 1; n <= 8; ++n) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        CHECK(homi::probability(c, 0.0).probability == 0.0);
    }
}

TEST_CASE("homi result decomposition invariant") {
    TestRng rng(0xcafe);
    for (int n : {1, 2, 5, 8}) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        for (int i = 0; i < 300; ++i) {
            const double tau = rng.uniform(-2.0, 2.0);
            const auto r = homi::probability(c, tau);
            CHECK(std::abs(r.probability - 0.5 * (1.0 - r.envelope * r.details)) < 1e-12);
            CHECK(r.probability >= 0.0);
            CHECK(r.probability <= 1.0);
        }
    }
}

TEST_CASE("homi tail levels off at one half") {
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    CHECK(std::abs(homi::probability(c, 10.0).probability - 0.5) < 1e-10);
    CHECK(std::abs(homi::probability(c, -10.0).probability - 0.5) < 1e-10);
}

TEST_CASE("homi closed form tracks the brute-force integral") {
    const SpectralModeConfig c{4, 5.0, 2.0, 0.0};
    const double closed = homi::probability(c, 0.1).probability;
    const double numeric = oracle::coincidence_numeric(c, 0.1);
    CHECK(rel_diff(closed, numeric) < 1e-3);
}

TEST_CASE("homi patterns are even in tau") {
    for (int n : {1, 3, 6}) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        for (double tau : {0.01, 0.3, 0.77, 1.49}) {
            CHECK(homi::probability(c, tau).probability ==
                  homi::probability(c, -tau).probability);
        }
    }
}

TEST_CASE("homi secondary-valley counts per mode number") {
    auto count = [](int n) {
        return analysis::homi_secondary_valley_count({n, 5.0, 2.0, 0.0});
    };
    CHECK(count(4) == 2);  // N-2 for even N
    CHECK(count(6) == 4);
    CHECK(count(8) == 6);
    CHECK(count(5) == 1);  // (N-3)/2 for odd N
    CHECK(count(7) == 2);
}

TEST_CASE("mode width narrows the envelope but leaves valley positions") {
    // The primary valleys track tau = m pi / alpha; the Gaussian envelope
    // drags each interior minimum by O(gamma^2 tau / alpha^2), a couple of
    // percent at the widest mode, so the positions are compared on that
    // scale while the envelope width collapses by an order of magnitude.
    const double alpha = 5.0;
    const double spacing = pi / alpha;
    double previous_half_width = 1e300;
    for (double gamma : {0.5, 2.5, 4.5}) {
        const SpectralModeConfig c{4, alpha, gamma, 0.0};
        const auto curve = homi::pattern(c, -1.5, 1.5, 3001);
        const auto minima = local_minima(curve.abscissa, curve.values, 1e-6);
        double first_primary = 1e300;
        for (const auto& m : minima) {
            if (m.x < 0.05) continue;
            if (details_factor(4, 2.0 * alpha * m.x) / 4.0 > 0.6) {
                first_primary = m.x;
                break;
            }
        }
        CHECK(std::abs(first_primary - spacing) < 0.025 * spacing);

        // envelope factor exp(-gamma^2 tau^2/4): half-height width 2 sqrt(ln2)/gamma
        const double half_width = 2.0 * std::sqrt(std::log(2.0)) / gamma;
        CHECK(half_width < previous_half_width);
        previous_half_width = half_width;
        const auto r = homi::probability(c, half_width);
        CHECK(std::abs(r.envelope * c.n_modes - 0.5) < 1e-12);
    }
}

TEST_CASE("mode spacing sets the primary valley spacing as 1/alpha") {
    std::vector<double> spacings;
    for (double alpha : {2.5, 5.0, 7.5}) {
        const SpectralModeConfig c{4, alpha, 2.0, 0.0};
        const auto curve = homi::pattern(c, -1.5, 1.5, 6001);
        const auto minima = local_minima(curve.abscissa, curve.values, 1e-6);
        std::vector<double> primaries;
        for (const auto& m : minima)
            if (details_factor(4, 2.0 * alpha * m.x) / 4.0 > 0.6)
                primaries.push_back(m.x);
        REQUIRE(primaries.size() >= 2);
        const double spacing = primaries[1] - primaries[0];
        CHECK(std::abs(spacing * alpha - pi) < 0.025 * pi);
        spacings.push_back(spacing);
    }
    // 1/alpha law across the set: 2.5 vs 7.5 gives a factor of 3
    CHECK(std::abs(spacings[0] / spacings[2] - 3.0) < 0.1);
}

TEST_CASE("envelope_via_fourier of a single Gaussian mode") {
    // projection of the N=1 JSI onto omega_-: exp(-w^2/gamma^2), unit-normalized
    const double gamma = 2.0;
    const auto grid = linspace(-30.0, 30.0, 4001);
    std::vector<double> proj(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        proj[i] = std::exp(-grid[i] * grid[i] / (gamma * gamma));
    const double taus[] = {1.0};
    const auto env = homi::envelope_via_fourier(grid, proj, taus);
    // integral ratio gives exp(-gamma^2 tau^2 / 4) = e^{-1}
    const double du = grid[1] - grid[0];
    double norm = 0.0;
    for (double v : proj) norm += v * du;
    CHECK(std::abs(env[0] / norm - std::exp(-1.0)) < 1e-6);
}

TEST_CASE("envelope_via_fourier of a delta-like projection is flat") {
    const auto grid = linspace(-10.0, 10.0, 2001);
    std::vector<double> proj(grid.size(), 0.0);
    proj[1000] = 1.0;  // single hot bin at omega_- = 0
    const auto taus = linspace(-2.0, 2.0, 41);
    const auto env = homi::envelope_via_fourier(grid, proj, taus);
    for (double v : env) CHECK(std::abs(v - env[0]) < 1e-12);
}

TEST_CASE("extended Wiener-Khinchin route reproduces the full pattern") {
    for (int n : {1, 3}) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        const auto grid = linspace(-45.0, 45.0, 4001);
        const auto proj = oracle::difference_frequency_projection(c, grid);
        REQUIRE(!proj.support_clipped);
        const auto taus = linspace(-1.5, 1.5, 301);
        const auto env = homi::envelope_via_fourier(proj.grid, proj.values, taus);
        double worst = 0.0;
        for (std::size_t i = 0; i < taus.size(); ++i) {
            const double direct = 1.0 - 2.0 * homi::probability(c, taus[i]).probability;
            worst = std::max(worst, std::abs(env[i] - direct));
        }
        CHECK(worst < 1e-3);
    }
}

TEST_CASE("envelope_via_fourier rejects grids too coarse for the delays") {
    const auto grid = linspace(-10.0, 10.0, 21);  // du = 1
    std::vector<double> proj(grid.size(), 0.1);
    const double taus[] = {10.0};  // du * tau > pi
    CHECK_THROWS_AS(homi::envelope_via_fourier(grid, proj, taus), NyquistError);
}

TEST_CASE("envelope_via_fourier rejects non-uniform grids") {
    std::vector<double> grid = {0.0, 1.0, 2.5, 3.0};
    std::vector<double> proj = {0.1, 0.2, 0.2, 0.1};
    const double taus[] = {0.5};
    CHECK_THROWS_AS(homi::envelope_via_fourier(grid, proj, taus), std::invalid_argument);
}

TEST_CASE("homi pattern sampling") {
    const SpectralModeConfig c{8, 5.0, 2.0, 0.0};
    const auto curve = homi::pattern(c, -1.5, 1.5, 3001);
    CHECK(curve.abscissa.size() == 3001);
    CHECK(curve.abscissa.front() == -1.5);
    CHECK(curve.abscissa.back() == 1.5);
    CHECK(curve.family == Family::homi);
    CHECK_NOTHROW(curve.validate());
    CHECK_THROWS_AS(homi::pattern(c, 1.0, -1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(homi::pattern(c, -1.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("closed_form_error_bound passes through the oracle gauge") {
    const SpectralModeConfig c{2, 5.0, 2.0, 0.0};
    CHECK(homi::closed_form_error_bound(c) == oracle::cross_term_weight(c));
}
