#include "interfero/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "interfero/homi.hpp"

namespace interfero::fisher {

namespace {

constexpr double kDegenerateP = 1e-12;

double fi_or_nan(const std::function<double(double)>& p, double tau, double step) {
    const double pt = p(tau);
    const double q = pt * (1.0 - pt);
    if (!(q >= kDegenerateP)) return std::numeric_limits<double>::quiet_NaN();
    const double d = (8.0 * (p(tau + step) - p(tau - step)) -
                      (p(tau + 2.0 * step) - p(tau - 2.0 * step))) /
                     (12.0 * step);
    return d * d / q;
}

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80 && (b - a) > 1e-13 * std::max(1.0, std::abs(b)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Monotone interval of P containing tau0, bounded by the nearest
// stationary points (sign changes of the sampled slope) or the scan window.
std::pair<double, double> monotone_branch(const std::function<double(double)>& p,
                                          double tau0, double half_window) {
    const int n = 4001;
    const std::vector<double> grid = linspace(tau0 - half_window, tau0 + half_window, n);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = p(grid[i]);

    const auto slope_sign = [&](std::size_t i) {
        const double d = vals[i + 1] - vals[i];
        return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    };
    std::size_t i0 = static_cast<std::size_t>((n - 1) / 2);  // interval holding tau0
    const int s0 = slope_sign(i0);
    if (s0 == 0)
        throw IdentifiabilityError("crlb_monte_carlo: pattern is flat at true_tau");

    std::size_t lo = i0;
    while (lo > 0 && slope_sign(lo - 1) == s0) --lo;
    std::size_t hi = i0;
    while (hi + 2 < grid.size() && slope_sign(hi + 1) == s0) ++hi;
    return {grid[lo], grid[hi + 1]};
}

double invert_on_branch(const std::function<double(double)>& p, double lo,
                        double hi, double target) {
    double p_lo = p(lo), p_hi = p(hi);
    const bool increasing = p_hi > p_lo;
    if (!increasing) {
        std::swap(p_lo, p_hi);
    }
    if (target <= p_lo) return increasing ? lo : hi;
    if (target >= p_hi) return increasing ? hi : lo;
    double a = lo, b = hi;
    for (int it = 0; it < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
        const double m = 0.5 * (a + b);
        const double pm = p(m);
        if ((pm < target) == increasing)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

}  // namespace

double numeric(const std::function<double(double)>& p_of_tau, double tau_ps,
               double step_ps, bool* degenerate) {
    if (!(step_ps > 0.0))
        throw std::invalid_argument("fisher::numeric: step must be > 0");
    const double direct = fi_or_nan(p_of_tau, tau_ps, step_ps);
    if (std::isfinite(direct)) {
        if (degenerate) *degenerate = false;
        return direct;
    }
    if (degenerate) *degenerate = true;
    // P(1-P) vanished: take the limit from symmetric offsets, extrapolating
    // the O(h^2) error away.
    double h = std::max(1e-3, 10.0 * step_ps);
    for (int tries = 0; tries < 40; ++tries, h *= 2.0) {
        const double f1a = fi_or_nan(p_of_tau, tau_ps + h, step_ps);
        const double f1b = fi_or_nan(p_of_tau, tau_ps - h, step_ps);
        const double f2a = fi_or_nan(p_of_tau, tau_ps + 0.5 * h, step_ps);
        const double f2b = fi_or_nan(p_of_tau, tau_ps - 0.5 * h, step_ps);
        if (std::isfinite(f1a) && std::isfinite(f1b) && std::isfinite(f2a) &&
            std::isfinite(f2b)) {
            const double c1 = 0.5 * (f1a + f1b);
            const double c2 = 0.5 * (f2a + f2b);
            return std::max(0.0, (4.0 * c2 - c1) / 3.0);
        }
    }
    throw ConvergenceError("fisher::numeric: no non-degenerate neighborhood found");
}

double closed_form(const SpectralModeConfig& config, double tau_ps) {
    config.validate();
    const double a = config.mode_spacing;
    const double g = config.mode_width;
    const double n = static_cast<double>(config.n_modes);
    const double s = std::sin(2.0 * a * tau_ps);
    if (std::abs(tau_ps) < 1e-5 || std::abs(s) < 1e-5) {
        // Numerator and denominator both vanish here; the direct ratio
        // cancels catastrophically, so fall back to the difference-quotient
        // form of the same quantity.
        auto p = [&config](double t) { return homi::probability(config, t).probability; };
        return numeric(p, tau_ps, 1e-4);
    }
    const double sn = std::sin(2.0 * a * n * tau_ps);
    const double cn = std::cos(2.0 * a * n * tau_ps);
    const double cot = std::cos(2.0 * a * tau_ps) / s;
    const double num =
        0.5 * g * g * tau_ps * sn - 2.0 * a * n * cn + 2.0 * a * sn * cot;
    const double den =
        n * n * std::exp(0.5 * g * g * tau_ps * tau_ps) * s * s - sn * sn;
    if (!std::isfinite(den)) return 0.0;  // envelope term overflowed: FI -> 0
    return num * num / den;
}

FisherCurve curve(const SpectralModeConfig& config, double tau_min,
                  double tau_max, int n_samples) {
    config.validate();
    FisherCurve c;
    c.config = config;
    c.tau_grid = linspace(tau_min, tau_max, n_samples);
    c.fi_values.reserve(c.tau_grid.size());
    for (double t : c.tau_grid) c.fi_values.push_back(closed_form(config, t));
    return c;
}

MaxResult find_max(const SpectralModeConfig& config, double window_lo,
                   double window_hi) {
    config.validate();
    if (!(window_hi > window_lo))
        throw std::invalid_argument("find_max: empty search window");
    // Step small enough to resolve the narrowest FI peaks of the largest
    // mode numbers in use.
    const double step =
        std::numbers::pi / (40.0 * config.n_modes * config.mode_spacing);
    const int n = std::max(
        513, static_cast<int>(std::ceil((window_hi - window_lo) / step)) + 1);
    const std::vector<double> grid = linspace(window_lo, window_hi, n);

    std::size_t best = 0;
    double best_fi = -1.0;
    std::vector<double> fi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        fi[i] = closed_form(config, grid[i]);
        if (fi[i] > best_fi) {
            best_fi = fi[i];
            best = i;
        }
    }

    const double lo = grid[best == 0 ? 0 : best - 1];
    const double hi = grid[std::min(best + 1, grid.size() - 1)];
    auto f = [&config](double t) { return closed_form(config, t); };
    const double tau_star = lo < hi ? golden_section_max(f, lo, hi) : grid[best];
    const double fi_star = std::max(f(tau_star), best_fi);

    MaxResult r;
    r.tau_star = f(tau_star) >= best_fi ? tau_star : grid[best];
    r.fi_max = fi_star;
    // A maximum pinned to the right edge (or a left edge away from the
    // symmetry point tau = 0) means the window clipped the peak.
    r.on_boundary = best + 1 >= grid.size() ||
                    (best == 0 && window_lo > 0.0);
    return r;
}

MaxResult find_max(const SpectralModeConfig& config) {
    config.validate();
    const double hi =
        3.0 / config.mode_width + std::numbers::pi / (2.0 * config.mode_spacing);
    return find_max(config, 0.0, hi);
}

std::vector<std::pair<int, double>> sqrt_fi_scan(double alpha, double gamma,
                                                 int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min)
        throw std::invalid_argument("sqrt_fi_scan: bad mode-number range");
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        const SpectralModeConfig c{n, alpha, gamma, 0.0};
        out.emplace_back(n, std::sqrt(find_max(c).fi_max));
    }
    return out;
}

LinearFit sqrt_fi_linear_fit(double alpha, double gamma, int n_min, int n_max) {
    if (n_max <= n_min)
        throw std::invalid_argument(
            "sqrt_fi_linear_fit: need at least two mode numbers for a regression");
    const auto pts = sqrt_fi_scan(alpha, gamma, n_min, n_max);
    const double n = static_cast<double>(pts.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [k, y] : pts) {
        const double x = static_cast<double>(k);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    const double mean_y = sy / n;
    double ss_res = 0.0, ss_tot = 0.0;
    for (const auto& [k, y] : pts) {
        const double pred = fit.slope * static_cast<double>(k) + fit.intercept;
        ss_res += (y - pred) * (y - pred);
        ss_tot += (y - mean_y) * (y - mean_y);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

double identifiable_operating_point(const SpectralModeConfig& config,
                                    int num_measurements,
                                    double min_expected_counts) {
    config.validate();
    if (num_measurements < 1)
        throw std::invalid_argument("identifiable_operating_point: num_measurements must be >= 1");
    const double hi =
        3.0 / config.mode_width + std::numbers::pi / (2.0 * config.mode_spacing);
    const int n = 20001;
    const std::vector<double> grid = linspace(hi / n, hi, n);
    double best_tau = 0.0, best_fi = -1.0;
    for (double t : grid) {
        const double p = homi::probability(config, t).probability;
        const double counts = num_measurements * std::min(p, 1.0 - p);
        if (counts < min_expected_counts) continue;
        const double fi = closed_form(config, t);
        if (fi > best_fi) {
            best_fi = fi;
            best_tau = t;
        }
    }
    if (best_fi < 0.0)
        throw IdentifiabilityError(
            "identifiable_operating_point: no delay satisfies the expected-count floor");
    return best_tau;
}

CrlbReport crlb_monte_carlo(const SpectralModeConfig& config, double true_tau,
                            int num_measurements, int num_trials,
                            std::uint64_t seed) {
    config.validate();
    if (num_measurements < 1)
        throw std::invalid_argument("crlb_monte_carlo: num_measurements must be >= 1");
    if (num_trials < 2)
        throw std::invalid_argument("crlb_monte_carlo: num_trials must be >= 2");

    auto p_of = [&config](double t) { return homi::probability(config, t).probability; };
    const double p_true = p_of(true_tau);
    if (!(p_true > 0.0 && p_true < 1.0))
        throw IdentifiabilityError("crlb_monte_carlo: P(true_tau) must lie strictly inside (0,1)");
    const double fi = closed_form(config, true_tau);
    if (fi < 1e-9)
        throw IdentifiabilityError("crlb_monte_carlo: pattern is locally flat at true_tau");

    const double half_window =
        3.0 / config.mode_width + std::numbers::pi / (2.0 * config.mode_spacing);
    const auto [branch_lo, branch_hi] = monotone_branch(p_of, true_tau, half_window);

    std::vector<double> estimates(static_cast<std::size_t>(num_trials));
    for (int t = 0; t < num_trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + static_cast<std::uint64_t>(t)));
        long successes = 0;
        for (int i = 0; i < num_measurements; ++i) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            successes += u < p_true;
        }
        const double p_hat =
            static_cast<double>(successes) / static_cast<double>(num_measurements);
        estimates[static_cast<std::size_t>(t)] =
            invert_on_branch(p_of, branch_lo, branch_hi, p_hat);
    }

    double mean = 0.0;
    for (double e : estimates) mean += e;
    mean /= static_cast<double>(num_trials);
    double var = 0.0;
    for (double e : estimates) var += (e - mean) * (e - mean);
    var /= static_cast<double>(num_trials - 1);

    CrlbReport r;
    r.true_tau = true_tau;
    r.num_trials = num_trials;
    r.num_measurements = num_measurements;
    r.seed = seed;
    r.mean_estimate = mean;
    r.estimator_sd = std::sqrt(var);
    r.crlb_sd = 1.0 / std::sqrt(static_cast<double>(num_measurements) * fi);
    return r;
}

}  // namespace interfero::fisher
