#include "interfero/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <nlohmann/json.hpp>

#include "interfero/analysis.hpp"
#include "interfero/fisher.hpp"
#include "interfero/homi.hpp"
#include "interfero/msi.hpp"
#include "interfero/mzi_noon.hpp"
#include "interfero/oracle.hpp"

namespace interfero::validate {

namespace {

using std::numbers::pi;

struct Rng {
    std::uint64_t state;
    double uniform(double lo, double hi) {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        return lo + (hi - lo) * (static_cast<double>(z >> 11) * 0x1.0p-53);
    }
};

void add(Report& r, const std::string& name, double measured,
         const std::string& cmp, double threshold) {
    bool pass = false;
    if (cmp == "<") pass = measured < threshold;
    else if (cmp == ">") pass = measured > threshold;
    else if (cmp == "==") pass = measured == threshold;
    r.checks.push_back({name, measured, threshold, cmp, pass});
}

double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

double cosine_sum(int n, double x) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += std::cos((2.0 * k - n - 1.0) * x);
    return acc;
}

void check_details(Report& r, const Hooks* hooks) {
    auto details = hooks && hooks->details_factor
                       ? hooks->details_factor
                       : std::function<double(int, double)>(details_factor);
    Rng rng{0xd37a11};
    double worst_identity = 0.0;
    for (int n = 1; n <= 12; ++n)
        for (int i = 0; i < 1000; ++i) {
            const double x = rng.uniform(-12.0, 12.0);
            worst_identity =
                std::max(worst_identity, std::abs(details(n, x) - cosine_sum(n, x)));
        }
    add(r, "details_cosine_sum_identity", worst_identity, "<", 1e-10);

    double worst_parity = 0.0, worst_bound = -1.0;
    for (int n = 1; n <= 10; ++n) {
        const double sign = n % 2 == 0 ? -1.0 : 1.0;
        for (int i = 0; i < 300; ++i) {
            const double x = rng.uniform(-6.0, 6.0);
            if (std::abs(std::sin(x)) > 1e-3)
                worst_parity = std::max(
                    worst_parity,
                    std::abs(details_factor(n, pi - x) - sign * details_factor(n, x)));
            worst_bound =
                std::max(worst_bound, std::abs(details_factor(n, x)) - n);
        }
    }
    add(r, "details_reflection_parity", worst_parity, "<", 1e-10);
    add(r, "details_bound_excess", worst_bound, "<", 1e-15);
}

void check_jsa(Report& r) {
    Rng rng{0x15a};
    double worst = 0.0;
    for (int n : {1, 2, 5, 8}) {
        const SpectralModeConfig c{n, 5.0, 2.0, 10.0};
        for (int i = 0; i < 200; ++i) {
            const double w1 = rng.uniform(-30.0, 50.0);
            const double w2 = rng.uniform(-30.0, 50.0);
            worst = std::max(worst,
                             rel(jsa_value(c, w1, w2, Correlation::anti_correlated),
                                 jsa_value(c, w2, w1, Correlation::anti_correlated)));
        }
    }
    add(r, "jsa_exchange_symmetry", worst, "<", 1e-12);
}

void check_homi_basics(Report& r) {
    double worst_dip = 0.0, worst_tail = 0.0, worst_sym = 0.0;
    Rng rng{0x4011};
    for (int n = 1; n <= 8; ++n) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        worst_dip = std::max(worst_dip, std::abs(homi::probability(c, 0.0).probability));
        for (double t : {5.0, 10.0})
            worst_tail = std::max(
                worst_tail, std::abs(homi::probability(c, t).probability - 0.5));
        for (int i = 0; i < 100; ++i) {
            const double t = rng.uniform(0.0, 2.0);
            worst_sym = std::max(worst_sym,
                                 std::abs(homi::probability(c, t).probability -
                                          homi::probability(c, -t).probability));
        }
    }
    add(r, "homi_dip_at_zero", worst_dip, "<", 1e-12);
    add(r, "homi_tail_level", worst_tail, "<", 1e-8);
    add(r, "homi_time_symmetry", worst_sym, "<", 1e-12);
}

void check_oracle_gaps(Report& r, Profile profile) {
    const double gamma = profile == Profile::strict ? 0.25 : 0.5;
    const double gate = profile == Profile::strict ? 1e-6 : 1e-4;
    const auto taus = linspace(-1.5, 1.5, 101);

    double worst_homi = 0.0, worst_mzi = 0.0, worst_noon = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const SpectralModeConfig hc{n, 5.0, gamma, 0.0};
        const auto oh = oracle::coincidence_numeric_curve(hc, taus);
        for (std::size_t i = 0; i < taus.size(); ++i)
            worst_homi = std::max(
                worst_homi,
                std::abs(homi::probability(hc, taus[i]).probability - oh[i]));

        const SingleSpectrumConfig mc{n, 5.0, gamma, 50.0};
        const auto om = oracle::mzi_numeric_curve(mc, taus);
        for (std::size_t i = 0; i < taus.size(); ++i)
            worst_mzi =
                std::max(worst_mzi, std::abs(mzi::probability(mc, taus[i]) - om[i]));

        const SpectralModeConfig qc{n, 5.0, gamma, 50.0};
        const auto oq = oracle::noon_numeric_curve(qc, taus);
        for (std::size_t i = 0; i < taus.size(); ++i)
            worst_noon =
                std::max(worst_noon, std::abs(noon::probability(qc, taus[i]) - oq[i]));
    }
    add(r, "homi_oracle_gap", worst_homi, "<", gate);
    add(r, "mzi_oracle_gap", worst_mzi, "<", gate);
    add(r, "noon_oracle_gap", worst_noon, "<", gate);
}

double homi_oracle_gap(const SpectralModeConfig& c) {
    const auto taus = linspace(-1.5, 1.5, 101);
    const auto oh = oracle::coincidence_numeric_curve(c, taus);
    double worst = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i)
        worst = std::max(worst,
                         std::abs(homi::probability(c, taus[i]).probability - oh[i]));
    return worst;
}

void check_cross_terms(Report& r) {
    const SpectralModeConfig narrow{2, 5.0, 2.0, 0.0};
    const SpectralModeConfig broad{2, 5.0, 4.5, 0.0};
    const double w_narrow = oracle::cross_term_weight(narrow);
    const double w_broad = oracle::cross_term_weight(broad);
    const double gap_narrow = homi_oracle_gap(narrow);
    const double gap_broad = homi_oracle_gap(broad);
    add(r, "cross_term_weight_narrow", w_narrow, "<", 1e-5);
    add(r, "cross_term_gap_within_weight", gap_narrow / w_narrow, "<", 1.0);
    add(r, "cross_term_weight_broad", w_broad, ">", 1e-2);
    add(r, "cross_term_gap_growth", gap_broad / std::max(gap_narrow, 1e-300), ">", 100.0);
    add(r, "cross_term_broad_gap_within_weight", gap_broad / w_broad, "<", 1.0);
}

void check_fisher(Report& r) {
    Rng rng{0xf15e};
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        auto p = [&c](double t) { return homi::probability(c, t).probability; };
        int used = 0;
        while (used < 200) {
            const double tau = rng.uniform(-1.5, 1.5);
            const double pv = p(tau);
            if (pv * (1.0 - pv) < 1e-4) continue;
            if (std::abs(std::sin(2.0 * c.mode_spacing * tau)) < 1e-3) continue;
            if (std::abs(tau) < 1e-3) continue;
            ++used;
            worst = std::max(worst, rel(fisher::closed_form(c, tau),
                                        fisher::numeric(p, tau)));
        }
    }
    add(r, "fisher_route_agreement", worst, "<", 1e-4);

    const SpectralModeConfig c1{1, 5.0, 2.0, 0.0};
    add(r, "fisher_single_mode_analytic",
        rel(fisher::closed_form(c1, 1.0), 4.0 / (std::exp(2.0) - 1.0)), "<", 1e-6);

    const auto lobes = analysis::fisher_side_lobes({8, 5.0, 2.0, 0.0}, 1.5, 6001);
    double top = 0.0;
    for (const auto& l : lobes) top = std::max(top, l.fi);
    std::vector<analysis::SideLobe> dominant;
    for (const auto& l : lobes)
        if (l.fi >= 0.6 * top) dominant.push_back(l);
    add(r, "fisher_side_lobe_pair", static_cast<double>(dominant.size()), "==", 2.0);
    if (dominant.size() == 2)
        add(r, "fisher_side_lobe_symmetry",
            std::abs(dominant[0].tau + dominant[1].tau), "<", 1e-3);

    const auto fit = fisher::sqrt_fi_linear_fit(5.0, 2.0, 1, 40);
    add(r, "sqrt_fi_r_squared", fit.r_squared, ">", 0.999);
    const auto pts = fisher::sqrt_fi_scan(5.0, 2.0, 1, 40);
    double worst_resid = 0.0;
    for (const auto& [n, y] : pts) {
        if (n < 3) continue;
        const double pred = fit.slope * n + fit.intercept;
        worst_resid = std::max(worst_resid, std::abs(y - pred) / pred);
    }
    add(r, "sqrt_fi_residual_n3_to_40", worst_resid, "<", 0.02);
}

void check_crlb(Report& r) {
    const SpectralModeConfig c{1, 5.0, 2.0, 0.0};
    const int num = 10000, trials = 1000;
    const double tau = fisher::identifiable_operating_point(c, num);
    const auto rep = fisher::crlb_monte_carlo(c, tau, num, trials, 0x5eed2024ull);
    const double ratio = rep.estimator_sd / rep.crlb_sd;
    add(r, "crlb_ratio_lower", ratio, ">", 1.0 - 3.0 / std::sqrt(double(trials)));
    add(r, "crlb_ratio_upper", ratio, "<", 1.1);
}

void check_ewkt(Report& r) {
    double worst = 0.0;
    for (int n : {1, 3}) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        const auto grid = linspace(-45.0, 45.0, 4001);
        const auto proj = oracle::difference_frequency_projection(c, grid);
        const auto taus = linspace(-1.5, 1.5, 301);
        const auto env = homi::envelope_via_fourier(proj.grid, proj.values, taus);
        for (std::size_t i = 0; i < taus.size(); ++i) {
            const double direct = 1.0 - 2.0 * homi::probability(c, taus[i]).probability;
            worst = std::max(worst, std::abs(env[i] - direct));
        }
    }
    add(r, "ewkt_reconstruction", worst, "<", 1e-3);
}

void check_msi(Report& r) {
    Rng rng{0x9a51};
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const SlitConfig c{n, 1e-5, 5e-4, 500e-9};
        for (int i = 0; i < 300; ++i) {
            const double s = rng.uniform(-1.0, 1.0);
            const double delta = 2.0 * pi * c.slit_pitch * s / c.wavelength;
            std::complex<double> sum = 0.0;
            for (int k = 0; k < n; ++k)
                sum += std::exp(std::complex<double>(0.0, k * delta));
            const double u = pi * c.slit_width * s / c.wavelength;
            const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
            worst = std::max(worst, std::abs(msi::intensity(c, s).intensity -
                                             std::norm(sum) * sinc * sinc));
        }
    }
    add(r, "msi_phasor_identity", worst, "<", 1e-10);
}

void check_reflection_and_bounds(Report& r) {
    Rng rng{0x0eef};
    double worst = 0.0;
    for (int n : {1, 2, 5, 8}) {
        const SpectralModeConfig c{n, 5.0, 2.0, 0.0};
        for (int i = 0; i < 300; ++i) {
            const double tau = rng.uniform(-2.0, 2.0);
            worst = std::max(worst, std::abs(1.0 - noon::probability(c, tau) -
                                             homi::probability(c, tau).probability));
        }
    }
    add(r, "noon_homi_reflection", worst, "<", 1e-12);

    double violations = 0.0;
    try {
        homi::pattern({8, 5.0, 2.0, 0.0}, -1.5, 1.5, 3001).validate();
        mzi::pattern({8, 5.0, 2.0, 50.0}, -1.5, 1.5, 3001).validate();
        noon::pattern({8, 5.0, 2.0, 50.0}, -1.5, 1.5, 3001).validate();
        msi::pattern({8, 1e-5, 5e-4, 500e-9}, -3.2e-3, 3.2e-3, 3001).validate();
    } catch (const std::exception&) {
        violations = 1.0;
    }
    add(r, "pattern_bounds", violations, "==", 0.0);
}

void check_structure_counts(Report& r) {
    int mismatches = 0;
    for (int n : {4, 6, 8})
        if (analysis::homi_secondary_valley_count({n, 5.0, 2.0, 0.0}) != n - 2)
            ++mismatches;
    for (int n : {5, 7})
        if (analysis::homi_secondary_valley_count({n, 5.0, 2.0, 0.0}) != (n - 3) / 2)
            ++mismatches;
    if (analysis::msi_secondary_peak_count({2, 1e-5, 5e-4, 500e-9}) != 0) ++mismatches;
    for (int n = 3; n <= 8; ++n)
        if (analysis::msi_secondary_peak_count({n, 1e-5, 5e-4, 500e-9}) != n - 2)
            ++mismatches;
    if (analysis::mzi_envelope_secondary_peak_count({5, 5.0, 2.0, 50.0}) != 3)
        ++mismatches;
    add(r, "structure_counts", static_cast<double>(mismatches), "==", 0.0);
}

void check_frequency_doubling(Report& r) {
    const auto taus = linspace(-1.5, 1.5, 3001);
    const double dt = taus[1] - taus[0];
    std::vector<double> m(taus.size()), q(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) {
        m[i] = mzi::probability({1, 5.0, 2.0, 50.0}, taus[i]);
        q[i] = noon::probability({1, 5.0, 2.0, 50.0}, taus[i]);
    }
    const double ratio = analysis::dominant_frequency(q, dt) /
                         analysis::dominant_frequency(m, dt);
    add(r, "fringe_frequency_doubling", std::abs(ratio - 2.0), "<", 0.05);
}

void check_oracle_misc(Report& r) {
    double worst = 0.0;
    for (double tau : {0.1, 0.45, 1.2})
        worst = std::max(worst,
                         std::abs(oracle::coincidence_numeric({3, 5.0, 2.0, 0.0}, tau) -
                                  oracle::coincidence_numeric({3, 5.0, 2.0, 100.0}, tau)));
    add(r, "oracle_center_frequency_invariance", worst, "<", 1e-8);

    const auto grid = linspace(-40.0, 40.0, 2001);
    const auto proj =
        oracle::difference_frequency_projection({3, 5.0, 2.0, 0.0}, grid);
    const double du = grid[1] - grid[0];
    double integral = 0.0;
    for (std::size_t i = 0; i < proj.values.size(); ++i) {
        const bool edge = i == 0 || i + 1 == proj.values.size();
        integral += (edge ? 0.5 : 1.0) * proj.values[i] * du;
    }
    add(r, "projection_unit_integral", std::abs(integral - 1.0), "<", 1e-8);
}

}  // namespace

Profile profile_from_string(const std::string& name) {
    if (name == "default" || name == "standard") return Profile::standard;
    if (name == "strict") return Profile::strict;
    throw std::invalid_argument("unknown validation profile: " + name);
}

const char* profile_name(Profile p) {
    return p == Profile::strict ? "strict" : "default";
}

int Report::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
}

std::string Report::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back({{"check_name", c.name},
                               {"measured", c.measured},
                               {"threshold", c.threshold},
                               {"comparison", c.comparison},
                               {"pass", c.pass}});
    const nlohmann::json j = {
        {"profile", profile},
        {"checks", checks_json},
        {"summary",
         {{"total", total()},
          {"passed", passed()},
          {"failed", total() - passed()},
          {"all_pass", all_pass()}}}};
    return j.dump(2);
}

Report run(Profile profile, const Hooks* hooks) {
    Report r;
    r.profile = profile_name(profile);
    check_details(r, hooks);
    check_jsa(r);
    check_homi_basics(r);
    check_oracle_gaps(r, profile);
    check_cross_terms(r);
    check_fisher(r);
    check_crlb(r);
    check_ewkt(r);
    check_msi(r);
    check_reflection_and_bounds(r);
    check_structure_counts(r);
    check_frequency_doubling(r);
    check_oracle_misc(r);
    return r;
}

}  // namespace interfero::validate
