#include <cmath>
#include <numbers>

#include "doctest.h"
#include "interfero/analysis.hpp"
#include "interfero/extrema.hpp"
#include "interfero/fisher.hpp"
#include "interfero/homi.hpp"
#include "test_common.hpp"

using namespace interfero;
using std::numbers::pi;

namespace {

double homi_p(const SpectralModeConfig& c, double t) {
    return homi::probability(c, t).probability;
}

}  // namespace

TEST_CASE("single-mode Fisher information at tau = 1") {
    // N=1 closed form collapses to (gamma^2 tau/2)^2 / (exp(gamma^2 tau^2/2) - 1)
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    const double expect = 4.0 / (std::exp(2.0) - 1.0);
    CHECK(rel_diff(fisher::closed_form(c, 1.0), expect) < 1e-6);

    auto p = [&c](double t) { return homi_p(c, t); };
    CHECK(rel_diff(fisher::numeric(p, 1.0), expect) < 1e-6);
}

TEST_CASE("closed form agrees with the difference-quotient route") {
    TestRng rng(0xf15c);
    for (int n = 1; n <= 8; ++n) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        auto p = [&c](double t) { return homi_p(c, t); };
        int used = 0;
        while (used < 200) {
            const double tau = rng.uniform(-1.5, 1.5);
            const double pv = homi_p(c, tau);
            // stay away from the removable singularities and degenerate points
            if (pv * (1.0 - pv) < 1e-4) continue;
            if (std::abs(std::sin(2.0 * c.mode_spacing * tau)) < 1e-3) continue;
            if (std::abs(tau) < 1e-3) continue;
            ++used;
            CHECK(rel_diff(fisher::closed_form(c, tau), fisher::numeric(p, tau)) < 1e-4);
        }
    }
}

TEST_CASE("Fisher information vanishes far into the tail") {
    for (int n : {1, 4, 8}) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        CHECK(fisher::closed_form(c, 10.0) < 1e-8);
        CHECK(fisher::closed_form(c, -25.0) < 1e-8);
    }
}

TEST_CASE("Fisher information is even") {
    const SpectralModeConfig c{5, 5.0, 2.0, 0.0};
    for (double tau : {0.04, 0.33, 1.2}) {
        CHECK(rel_diff(fisher::closed_form(c, tau), fisher::closed_form(c, -tau)) < 1e-12);
    }
}

TEST_CASE("flat probability carries no information") {
    auto flat = [](double) { return 0.5; };
    bool degenerate = true;
    CHECK(fisher::numeric(flat, 0.7, 1e-4, &degenerate) == 0.0);
    CHECK(!degenerate);
}

TEST_CASE("numeric route gives up on a curve that is degenerate everywhere") {
    auto zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(fisher::numeric(zero, 0.3), ConvergenceError);
    CHECK_THROWS_AS(fisher::numeric(zero, 0.3, 0.0), std::invalid_argument);
}

TEST_CASE("numeric route flags the degenerate dip bottom and takes the limit") {
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    auto p = [&c](double t) { return homi_p(c, t); };
    bool degenerate = false;
    const double fi0 = fisher::numeric(p, 0.0, 1e-4, &degenerate);
    CHECK(degenerate);
    // analytic limit gamma^2/2 = 2
    CHECK(rel_diff(fi0, 2.0) < 1e-4);
}

TEST_CASE("closed form is finite and matches an independent step at singular points") {
    const SpectralModeConfig c{3, 5.0, 2.0, 0.0};
    const double tau_s = pi / (2.0 * c.mode_spacing);  // sin(2 alpha tau) = 0
    const double at = fisher::closed_form(c, tau_s);
    CHECK(std::isfinite(at));
    CHECK(at >= 0.0);
    // two-route check at the same point with an unrelated step size
    auto p = [&c](double t) { return homi_p(c, t); };
    CHECK(rel_diff(at, fisher::numeric(p, tau_s, 3.7e-4)) < 1e-3);

    // dense sweep across the singular set stays finite and non-negative
    for (double t = tau_s - 1e-4; t <= tau_s + 1e-4; t += 2e-6) {
        const double v = fisher::closed_form(c, t);
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
    }

    const double at0 = fisher::closed_form(c, 0.0);
    // FI(0) = gamma^2/2 + 4 alpha^2 (N^2-1)/3
    const double expect0 = 2.0 + 4.0 * 25.0 * 8.0 / 3.0;
    CHECK(rel_diff(at0, expect0) < 1e-4);
}

TEST_CASE("eight-mode information curve has a symmetric double side lobe") {
    // The removable singular point at tau = 0 carries the finite limit
    // gamma^2/2 + 4 alpha^2 (N^2-1)/3; the flanking structure beyond the
    // first FI zero concentrates in exactly one symmetric lobe pair.
    const SpectralModeConfig c{8, 5.0, 2.0, 0.0};
    const auto lobes = analysis::fisher_side_lobes(c, 1.5, 6001);
    REQUIRE(lobes.size() >= 2);
    double top = 0.0;
    for (const auto& l : lobes) top = std::max(top, l.fi);
    std::vector<analysis::SideLobe> dominant;
    for (const auto& l : lobes)
        if (l.fi >= 0.6 * top) dominant.push_back(l);
    REQUIRE(dominant.size() == 2);
    CHECK(dominant[0].tau < 0.0);
    CHECK(dominant[1].tau > 0.0);
    CHECK(std::abs(dominant[0].tau + dominant[1].tau) < 1e-3);
    CHECK(rel_diff(dominant[0].fi, dominant[1].fi) < 1e-6);
}

TEST_CASE("find_max matches a brute-force scan for the single mode") {
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    const auto r = fisher::find_max(c);
    // brute force at 1e-6 resolution; the plateau around zero is flat to
    // ~1e-6 relative (cancellation noise floor of the direct ratio there)
    double best_fi = -1.0, best_tau = 0.0;
    for (double t = 0.0; t <= 0.02; t += 1e-6) {
        const double fi = fisher::closed_form(c, t);
        if (fi > best_fi) {
            best_fi = fi;
            best_tau = t;
        }
    }
    CHECK(rel_diff(r.fi_max, best_fi) < 1e-5);
    CHECK(std::abs(r.tau_star - best_tau) < 1e-3);
    CHECK(rel_diff(r.fi_max, 2.0) < 1e-4);  // gamma^2/2
    CHECK(!r.on_boundary);                  // tau = 0 is the symmetry point
}

TEST_CASE("find_max flags a window that clips the peak") {
    const SpectralModeConfig c{8, 5.0, 2.0, 0.0};
    const auto full = fisher::find_max(c);
    CHECK(!full.on_boundary);
    CHECK(full.fi_max > 0.0);
    // FI decreases monotonically on [0.001, 0.01]; the maximum pins to the
    // left window edge, which is away from the symmetry point
    const auto clipped = fisher::find_max(c, 0.001, 0.01);
    CHECK(clipped.on_boundary);
}

TEST_CASE("maximal information grows strictly with the mode number") {
    double previous = 0.0;
    for (int n = 1; n <= 12; ++n) {
        const auto r = fisher::find_max({n, 5.0, 2.0, 0.0});
        CHECK(r.fi_max > previous);
        previous = r.fi_max;
    }
}

TEST_CASE("sqrt of maximal information is linear in N") {
    // max FI = gamma^2/2 + 4 alpha^2 (N^2 - 1)/3 exactly (the central
    // limit value), so sqrt(max FI) is asymptotically linear with visible
    // curvature only at the first two mode numbers.
    const auto fit = fisher::sqrt_fi_linear_fit(5.0, 2.0, 1, 40);
    CHECK(fit.r_squared > 0.999);
    CHECK(fit.slope > 0.0);
    // asymptotic slope 2 alpha / sqrt(3)
    CHECK(rel_diff(fit.slope, 2.0 * 5.0 / std::sqrt(3.0)) < 0.01);

    const auto pts = fisher::sqrt_fi_scan(5.0, 2.0, 1, 40);
    for (const auto& [n, y] : pts) {
        const double expect = std::sqrt(2.0 + 4.0 * 25.0 * (n * n - 1.0) / 3.0);
        CHECK(rel_diff(y, expect) < 1e-4);
        if (n >= 3) {
            const double pred = fit.slope * n + fit.intercept;
            CHECK(std::abs(y - pred) < 0.02 * pred);
        }
    }
}

TEST_CASE("degenerate fit ranges are rejected") {
    CHECK_THROWS_AS(fisher::sqrt_fi_linear_fit(5.0, 2.0, 3, 3), std::invalid_argument);
}

TEST_CASE("doubling the mode spacing steepens the scaling") {
    const auto slow = fisher::sqrt_fi_linear_fit(5.0, 2.0, 1, 10);
    const auto fast = fisher::sqrt_fi_linear_fit(10.0, 2.0, 1, 10);
    CHECK(fast.slope > slow.slope);
}

TEST_CASE("identifiable operating point sits on the dip shoulder") {
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    const double tau = fisher::identifiable_operating_point(c, 10000);
    const double p = homi_p(c, tau);
    CHECK(p >= 100.0 / 10000.0 - 1e-6);
    CHECK(p < 0.05);  // as close to the high-information dip as the floor allows
    CHECK(fisher::closed_form(c, tau) > 1.9);
}

TEST_CASE("Cramer-Rao Monte Carlo respects the bound and is efficient") {
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    const double tau = fisher::identifiable_operating_point(c, 10000);
    const auto rep = fisher::crlb_monte_carlo(c, tau, 10000, 400, 20240811ull);
    CHECK(rep.crlb_sd > 0.0);
    const double slack = 3.0 / std::sqrt(static_cast<double>(rep.num_trials));
    CHECK(rep.estimator_sd >= rep.crlb_sd * (1.0 - slack));
    CHECK(rep.estimator_sd <= rep.crlb_sd * 1.1);
    CHECK(std::abs(rep.mean_estimate - tau) < 5.0 * rep.crlb_sd);
}

TEST_CASE("Monte Carlo is bit-reproducible for a fixed seed") {
    const SpectralModeConfig c{2, 5.0, 2.0, 0.0};
    const double tau = fisher::identifiable_operating_point(c, 2000);
    const auto a = fisher::crlb_monte_carlo(c, tau, 2000, 50, 7ull);
    const auto b = fisher::crlb_monte_carlo(c, tau, 2000, 50, 7ull);
    CHECK(a.estimator_sd == b.estimator_sd);
    CHECK(a.mean_estimate == b.mean_estimate);
    const auto other = fisher::crlb_monte_carlo(c, tau, 2000, 50, 8ull);
    CHECK(other.estimator_sd != a.estimator_sd);
}

TEST_CASE("Monte Carlo rejects unidentifiable operating points") {
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    // dip bottom: P = 0 exactly
    CHECK_THROWS_AS(fisher::crlb_monte_carlo(c, 0.0, 1000, 10, 1ull),
                    IdentifiabilityError);

    // stationary point of a two-mode pattern: locally flat. The envelope
    // drags the peak slightly off pi/(2 alpha), so locate it first.
    const SpectralModeConfig c2{2, 5.0, 2.0, 0.0};
    double a = 0.25, b = 0.35;
    for (int it = 0; it < 200; ++it) {
        const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (homi_p(c2, m1) < homi_p(c2, m2)) a = m1;
        else b = m2;
    }
    const double flat_tau = 0.5 * (a + b);
    CHECK_THROWS_AS(fisher::crlb_monte_carlo(c2, flat_tau, 1000, 10, 1ull),
                    IdentifiabilityError);
}

TEST_CASE("fisher curve values are finite and non-negative") {
    const auto fc = fisher::curve({6, 5.0, 2.0, 0.0}, -1.5, 1.5, 2001);
    for (double v : fc.fi_values) {
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
    }
}
