#include <cmath>
#include <numbers>

#include "doctest.h"
#include "interfero/core.hpp"
#include "test_common.hpp"

using namespace interfero;
using std::numbers::pi;

namespace {

// Independent route for sin(Nx)/sin(x): the cosine-sum expansion.
double cosine_sum(int n, double x) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += std::cos((2.0 * k - n - 1.0) * x);
    return acc;
}

}  // namespace

TEST_CASE("details_factor at the origin equals N") {
    CHECK(details_factor(3, 0.0) == 3.0);
    CHECK(details_factor(1, 0.0) == 1.0);
    CHECK(details_factor(12, 0.0) == 12.0);
}

TEST_CASE("details_factor zero of sin(Nx) away from shared zeros") {
    // N=2, x=pi/2: sin(pi) = 0 while sin(pi/2) = 1
    CHECK(std::abs(details_factor(2, pi / 2.0)) < 1e-15);
}

TEST_CASE("details_factor removable singularity at x = pi") {
    // limit value N*(-1)^(m(N-1)) with m=1
    CHECK(details_factor(4, pi) == -4.0);
    CHECK(details_factor(3, pi) == 3.0);
    CHECK(details_factor(5, 2.0 * pi) == 5.0);
    CHECK(details_factor(6, 3.0 * pi) == -6.0);
}

TEST_CASE("details_factor equals the cosine sum at a generic point") {
    const double expect = cosine_sum(5, 0.3);
    CHECK(std::abs(details_factor(5, 0.3) - expect) < 1e-12);
}

TEST_CASE("details_factor cosine-sum identity, N <= 12, 1000 points each") {
    TestRng rng(0x1dabe11);
    for (int n = 1; n <= 12; ++n) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double x = rng.uniform(-12.0, 12.0);
            worst = std::max(worst, std::abs(details_factor(n, x) - cosine_sum(n, x)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("details_factor reflection parity D(pi - x) = (-1)^(N+1) D(x)") {
    TestRng rng(0xf01d);
    for (int n = 1; n <= 10; ++n) {
        const double sign = (n % 2 == 0) ? -1.0 : 1.0;
        for (int i = 0; i < 200; ++i) {
            const double x = rng.uniform(-6.0, 6.0);
            if (std::abs(std::sin(x)) < 1e-3) continue;
            CHECK(std::abs(details_factor(n, pi - x) - sign * details_factor(n, x)) < 1e-10);
        }
    }
}

TEST_CASE("details_factor bounded by N with equality at multiples of pi") {
    TestRng rng(0xb0b);
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; i < 500; ++i) {
            const double x = rng.uniform(-20.0, 20.0);
            CHECK(std::abs(details_factor(n, x)) <= static_cast<double>(n));
        }
        for (int m = -3; m <= 3; ++m)
            CHECK(std::abs(details_factor(n, m * pi)) == static_cast<double>(n));
    }
}

TEST_CASE("details_factor rejects non-positive mode counts") {
    CHECK_THROWS_AS(details_factor(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(details_factor(-2, 1.0), std::invalid_argument);
}

TEST_CASE("jsa_value at a mode center") {
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    CHECK(jsa_value(c, 0.0, 0.0, Correlation::anti_correlated) == 1.0);
}

TEST_CASE("jsa_value two-mode sum") {
    const SpectralModeConfig c{2, 5.0, 2.0, 0.0};
    // at the (+alpha, -alpha) mode center the other mode contributes exp(-50)
    const double v = jsa_value(c, 5.0, -5.0, Correlation::anti_correlated);
    CHECK(std::abs(v - 1.0) < 1e-10);
    CHECK(std::abs(v - (1.0 + std::exp(-2.0 * 100.0 / 4.0))) < 1e-18);
}

TEST_CASE("jsa_value correlated placement sits on the diagonal") {
    const SpectralModeConfig c{2, 5.0, 2.0, 50.0};
    CHECK(std::abs(jsa_value(c, 55.0, 55.0, Correlation::correlated) - 1.0) < 1e-10);
    CHECK(jsa_value(c, 55.0, 45.0, Correlation::correlated) < 1e-10);
}

TEST_CASE("jsa_value anti-correlated exchange symmetry") {
    TestRng rng(0x5ca1e);
    for (int n : {1, 2, 3, 5, 8}) {
        const SpectralModeConfig c{n, 5.0, 2.0, 10.0};
        for (int i = 0; i < 200; ++i) {
            const double w1 = rng.uniform(-30.0, 50.0);
            const double w2 = rng.uniform(-30.0, 50.0);
            const double a = jsa_value(c, w1, w2, Correlation::anti_correlated);
            const double b = jsa_value(c, w2, w1, Correlation::anti_correlated);
            CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(jsa_value({0, 5.0, 2.0, 0.0}, 0, 0, Correlation::anti_correlated),
                    std::invalid_argument);
    CHECK_THROWS_AS(jsa_value({2, -1.0, 2.0, 0.0}, 0, 0, Correlation::anti_correlated),
                    std::invalid_argument);
    CHECK_THROWS_AS(jsa_value({2, 5.0, 0.0, 0.0}, 0, 0, Correlation::anti_correlated),
                    std::invalid_argument);
    CHECK_THROWS_AS(jsa_value({2, 5.0, 2.0, -1.0}, 0, 0, Correlation::anti_correlated),
                    std::invalid_argument);

    SlitConfig s{4, 1e-5, 5e-4, 500e-9};
    CHECK_NOTHROW(s.validate());
    s.slit_width = 6e-4;  // wider than the pitch
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);

    const SpectralModeConfig narrow{4, 5.0, 2.0, 0.0};
    CHECK(narrow.well_separated());
    const SpectralModeConfig broad{4, 5.0, 4.5, 0.0};
    CHECK(!broad.well_separated());
}

TEST_CASE("pattern curve invariants") {
    PatternCurve c;
    c.abscissa = {0.0, 1.0, 2.0};
    c.values = {0.1, 0.5, 0.9};
    c.family = Family::homi;
    c.config_snapshot = SpectralModeConfig{};
    CHECK_NOTHROW(c.validate());

    PatternCurve bad = c;
    bad.values[1] = 1.5;  // outside [0,1]
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = c;
    bad.abscissa = {0.0, 2.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    PatternCurve slit;
    slit.abscissa = {0.0, 1.0};
    slit.values = {16.0, 3.0};
    slit.family = Family::msi;
    slit.config_snapshot = SlitConfig{4, 1e-5, 5e-4, 500e-9};
    CHECK_NOTHROW(slit.validate());
    slit.values[0] = 16.5;  // above N^2
    CHECK_THROWS_AS(slit.validate(), std::invalid_argument);
}

TEST_CASE("linspace endpoints and spacing") {
    const auto g = linspace(-1.5, 1.5, 4);
    REQUIRE(g.size() == 4);
    CHECK(g.front() == -1.5);
    CHECK(g.back() == 1.5);
    CHECK(std::abs(g[1] + 0.5) < 1e-15);
    CHECK_THROWS_AS(linspace(1.0, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), std::invalid_argument);
}
