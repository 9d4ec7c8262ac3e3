#include "interfero/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace interfero::oracle {

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

struct Interval {
    double lo, hi;
};

// One cell per mode center, truncated at half_width but never crossing the
// midpoint to a neighbor; when cells overlap they share the midpoint
// boundary, when modes are far apart the gaps are dropped entirely.
std::vector<Interval> mode_panels(std::vector<double> centers, double half_width) {
    std::sort(centers.begin(), centers.end());
    std::vector<Interval> panels;
    const std::size_t n = centers.size();
    for (std::size_t k = 0; k < n; ++k) {
        double lo = centers[k] - half_width;
        double hi = centers[k] + half_width;
        if (k > 0) lo = std::max(lo, 0.5 * (centers[k - 1] + centers[k]));
        if (k + 1 < n) hi = std::min(hi, 0.5 * (centers[k] + centers[k + 1]));
        if (hi > lo) panels.push_back({lo, hi});
    }
    return panels;
}

struct Axis {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Axis build_axis(const std::vector<Interval>& panels, int pts_per_panel) {
    std::vector<double> gx, gw;
    gauss_legendre(pts_per_panel, gx, gw);
    Axis ax;
    ax.nodes.reserve(panels.size() * pts_per_panel);
    ax.weights.reserve(panels.size() * pts_per_panel);
    for (const auto& p : panels) {
        const double mid = 0.5 * (p.lo + p.hi);
        const double half = 0.5 * (p.hi - p.lo);
        for (int i = 0; i < pts_per_panel; ++i) {
            ax.nodes.push_back(mid + half * gx[i]);
            ax.weights.push_back(half * gw[i]);
        }
    }
    return ax;
}

// Tensor-product quadrature data for double integrals of |f|^2 against an
// oscillatory factor. Both axes share the same node set (the mode centers
// are mirror-symmetric for every placement used here). The matrix
// m[i*n+j] = w_i w_j f(x_i, x_j)^2 is built once per grid and reused for
// every tau.
class PairGrid {
  public:
    PairGrid(Axis axis, const std::function<double(double, double)>& f)
        : x_(std::move(axis.nodes)) {
        const std::size_t n = x_.size();
        m_.resize(n * n);
        norm_ = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double a = f(x_[i], x_[j]);
                const double v = axis.weights[i] * axis.weights[j] * a * a;
                m_[i * n + j] = v;
                norm_ += v;
            }
        }
    }

    double norm() const { return norm_; }

    // sum_ij m_ij cos((x_i - x_j) tau); expanded through the angle-sum
    // identity so the double loop is pure multiply-add.
    double cos_diff(double tau) const { return reduce(tau, +1.0); }
    // sum_ij m_ij cos((x_i + x_j) tau)
    double cos_sum(double tau) const { return reduce(tau, -1.0); }

  private:
    double reduce(double tau, double sign) const {
        const std::size_t n = x_.size();
        std::vector<double> c(n), s(n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = std::cos(x_[i] * tau);
            s[i] = std::sin(x_[i] * tau);
        }
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double* row = &m_[i * n];
            double uc = 0.0, us = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                uc += row[j] * c[j];
                us += row[j] * s[j];
            }
            total += c[i] * uc + sign * s[i] * us;
        }
        return total;
    }

    std::vector<double> x_;
    std::vector<double> m_;
    double norm_ = 0.0;
};

class Grid1D {
  public:
    Grid1D(Axis axis, const std::function<double(double)>& f)
        : x_(std::move(axis.nodes)) {
        const std::size_t n = x_.size();
        m_.resize(n);
        norm_ = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double a = f(x_[i]);
            m_[i] = axis.weights[i] * a * a;
            norm_ += m_[i];
        }
    }

    double norm() const { return norm_; }

    double cosw(double tau) const {
        double total = 0.0;
        for (std::size_t i = 0; i < x_.size(); ++i)
            total += m_[i] * std::cos(x_[i] * tau);
        return total;
    }

  private:
    std::vector<double> x_, m_;
    double norm_ = 0.0;
};

// Runs the sweep at two grid resolutions, accepting the finer value once
// successive refinements agree to rel_tolerance and doubling otherwise.
template <typename Grid, typename MakeGrid, typename Use>
std::vector<double> refined_sweep(const QuadratureSpec& spec, MakeGrid make,
                                  Use use, std::span<const double> taus) {
    int ppm = spec.points_per_mode;
    const int max_ppm = spec.points_per_mode * 8;
    Grid coarse = make(ppm);
    Grid fine = make(2 * ppm);
    std::vector<double> out(taus.size());
    for (std::size_t t = 0; t < taus.size(); ++t) {
        for (;;) {
            const double v1 = use(coarse, taus[t]);
            const double v2 = use(fine, taus[t]);
            if (std::abs(v2 - v1) <=
                spec.rel_tolerance * std::max(1.0, std::abs(v2))) {
                out[t] = v2;
                break;
            }
            if (2 * ppm >= max_ppm)
                throw ConvergenceError(
                    "oracle: quadrature did not converge at maximum refinement "
                    "depth");
            ppm *= 2;
            coarse = std::move(fine);
            fine = make(2 * ppm);
        }
    }
    return out;
}

std::vector<double> mode_centers(int n_modes, double spacing, double center) {
    std::vector<double> c(n_modes);
    for (int k = 1; k <= n_modes; ++k)
        c[k - 1] = center + static_cast<double>(2 * k - n_modes - 1) * spacing;
    return c;
}

std::function<double(double, double)> mode_comb2(const SpectralModeConfig& c,
                                                 Correlation corr,
                                                 Envelope2D f0) {
    return [c, corr, f0 = std::move(f0)](double w1, double w2) {
        double acc = 0.0;
        for (int k = 1; k <= c.n_modes; ++k) {
            const double off = c.mode_offset(k);
            const double u = w1 - c.center_frequency - off;
            const double v = corr == Correlation::anti_correlated
                                 ? w2 - c.center_frequency + off
                                 : w2 - c.center_frequency - off;
            acc += f0.f(u, v);
        }
        return acc;
    };
}

Envelope2D gaussian_envelope2(double gamma, double truncation_sigmas) {
    const double g2 = gamma * gamma;
    const double hw = truncation_sigmas * gamma / std::numbers::sqrt2;
    return {[g2](double u, double v) { return std::exp(-(u * u + v * v) / g2); },
            hw, hw};
}

Envelope1D gaussian_envelope1(double gamma, double truncation_sigmas) {
    const double g2 = gamma * gamma;
    const double hw = truncation_sigmas * gamma / std::numbers::sqrt2;
    return {[g2](double u) { return std::exp(-u * u / g2); }, hw};
}

std::vector<double> pair_sweep(const SpectralModeConfig& config,
                               const Envelope2D& f0, Correlation corr,
                               std::span<const double> taus,
                               const QuadratureSpec& spec, bool difference) {
    config.validate();
    spec.validate();
    if (!(f0.half_width_1 > 0.0) || !(f0.half_width_2 > 0.0))
        throw std::invalid_argument("oracle: envelope support must be positive");
    const double hw = std::max(f0.half_width_1, f0.half_width_2);
    const auto centers =
        mode_centers(config.n_modes, config.mode_spacing, config.center_frequency);
    const auto panels = mode_panels(centers, hw);
    const auto f = mode_comb2(config, corr, f0);
    auto make = [&](int ppm) { return PairGrid(build_axis(panels, ppm), f); };
    auto use = [&](const PairGrid& g, double tau) {
        if (!(g.norm() > 0.0))
            throw std::invalid_argument("oracle: envelope integrates to zero");
        return difference ? 0.5 - 0.5 * g.cos_diff(tau) / g.norm()
                          : 0.5 + 0.5 * g.cos_sum(tau) / g.norm();
    };
    return refined_sweep<PairGrid>(spec, make, use, taus);
}

bool uniform_increasing(std::span<const double> grid, double* step) {
    if (grid.size() < 2) return false;
    const double du = (grid.back() - grid.front()) / (grid.size() - 1);
    if (!(du > 0.0)) return false;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double expect = grid.front() + du * i;
        if (std::abs(grid[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
            return false;
    }
    *step = du;
    return true;
}

SampledProjection project_marginal(const SpectralModeConfig& config,
                                   Correlation corr, bool onto_difference,
                                   std::span<const double> grid,
                                   const QuadratureSpec& spec) {
    config.validate();
    spec.validate();
    double du = 0.0;
    if (!uniform_increasing(grid, &du))
        throw std::invalid_argument(
            "projection: grid must be uniform and strictly increasing");

    // The integrated coordinate is concentrated in a single Gaussian cell:
    // omega_+ around 2*omega0 for anti-correlated modes, omega_- around 0
    // for correlated ones.
    const double int_center =
        onto_difference ? 2.0 * config.center_frequency : 0.0;
    const double int_half = spec.truncation_sigmas * config.mode_width;
    const int n_nodes = std::max(2 * spec.points_per_mode, 128);
    Axis ax = build_axis({{int_center - int_half, int_center + int_half}}, n_nodes);

    SampledProjection out;
    out.grid.assign(grid.begin(), grid.end());
    out.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double fixed = grid[i];
        double acc = 0.0;
        for (std::size_t j = 0; j < ax.nodes.size(); ++j) {
            // (omega_plus, omega_minus) -> (w1, w2)
            const double wp = onto_difference ? ax.nodes[j] : fixed;
            const double wm = onto_difference ? fixed : ax.nodes[j];
            const double a =
                jsa_value(config, 0.5 * (wp + wm), 0.5 * (wp - wm), corr);
            acc += ax.weights[j] * a * a;
        }
        out.values[i] = acc;
    }

    const double peak = *std::max_element(out.values.begin(), out.values.end());
    if (!(peak > 0.0))
        throw std::invalid_argument("projection: grid misses the support entirely");
    out.support_clipped = out.values.front() > 1e-8 * peak ||
                          out.values.back() > 1e-8 * peak;

    double integral = 0.0;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const bool edge = i == 0 || i + 1 == out.values.size();
        integral += (edge ? 0.5 : 1.0) * out.values[i] * du;
    }
    for (double& v : out.values) v /= integral;
    return out;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(truncation_sigmas >= 4.0))
        throw std::invalid_argument("QuadratureSpec: truncation_sigmas must be >= 4");
    if (points_per_mode < 8)
        throw std::invalid_argument("QuadratureSpec: points_per_mode must be >= 8");
    if (!(rel_tolerance > 0.0))
        throw std::invalid_argument("QuadratureSpec: rel_tolerance must be > 0");
}

TabulatedEnvelope1D::TabulatedEnvelope1D(double u_min, double u_max,
                                         std::vector<double> values)
    : u_min_(u_min), u_max_(u_max), values_(std::move(values)) {
    if (values_.size() < 2 || !(u_max_ > u_min_))
        throw std::invalid_argument("TabulatedEnvelope1D: need >= 2 samples on a positive span");
    du_ = (u_max_ - u_min_) / static_cast<double>(values_.size() - 1);
}

double TabulatedEnvelope1D::operator()(double u) const {
    const double t = (u - u_min_) / du_;
    if (t < 0.0 || t > static_cast<double>(values_.size() - 1)) return 0.0;
    const auto i = std::min(static_cast<std::size_t>(t), values_.size() - 2);
    const double frac = t - static_cast<double>(i);
    return values_[i] + frac * (values_[i + 1] - values_[i]);
}

Envelope1D TabulatedEnvelope1D::as_envelope() const {
    const double hw = std::max(std::abs(u_min_), std::abs(u_max_));
    return {[copy = *this](double u) { return copy(u); }, hw};
}

TabulatedEnvelope2D::TabulatedEnvelope2D(double u_min, double u_max, int nu,
                                         double v_min, double v_max, int nv,
                                         std::vector<double> values)
    : u_min_(u_min), u_max_(u_max), v_min_(v_min), v_max_(v_max),
      nu_(nu), nv_(nv), values_(std::move(values)) {
    if (nu_ < 2 || nv_ < 2 || !(u_max_ > u_min_) || !(v_max_ > v_min_))
        throw std::invalid_argument("TabulatedEnvelope2D: need a 2x2 grid on positive spans");
    if (values_.size() != static_cast<std::size_t>(nu_) * static_cast<std::size_t>(nv_))
        throw std::invalid_argument("TabulatedEnvelope2D: value count does not match grid");
    du_ = (u_max_ - u_min_) / static_cast<double>(nu_ - 1);
    dv_ = (v_max_ - v_min_) / static_cast<double>(nv_ - 1);
}

double TabulatedEnvelope2D::operator()(double u, double v) const {
    const double tu = (u - u_min_) / du_;
    const double tv = (v - v_min_) / dv_;
    if (tu < 0.0 || tu > nu_ - 1 || tv < 0.0 || tv > nv_ - 1) return 0.0;
    const int i = std::min(static_cast<int>(tu), nu_ - 2);
    const int j = std::min(static_cast<int>(tv), nv_ - 2);
    const double fu = tu - i, fv = tv - j;
    const double* row0 = &values_[static_cast<std::size_t>(j) * nu_];
    const double* row1 = row0 + nu_;
    const double a = row0[i] + fu * (row0[i + 1] - row0[i]);
    const double b = row1[i] + fu * (row1[i + 1] - row1[i]);
    return a + fv * (b - a);
}

Envelope2D TabulatedEnvelope2D::as_envelope() const {
    const double hw1 = std::max(std::abs(u_min_), std::abs(u_max_));
    const double hw2 = std::max(std::abs(v_min_), std::abs(v_max_));
    return {[copy = *this](double u, double v) { return copy(u, v); }, hw1, hw2};
}

double coincidence_numeric(const SpectralModeConfig& config, double tau,
                           const QuadratureSpec& spec) {
    const double t[] = {tau};
    return coincidence_numeric_curve(config, t, spec)[0];
}

std::vector<double> coincidence_numeric_curve(const SpectralModeConfig& config,
                                              std::span<const double> taus,
                                              const QuadratureSpec& spec) {
    return pair_sweep(config,
                      gaussian_envelope2(config.mode_width, spec.truncation_sigmas),
                      Correlation::anti_correlated, taus, spec, true);
}

double coincidence_numeric(const SpectralModeConfig& config, const Envelope2D& f0,
                           double tau, const QuadratureSpec& spec) {
    const double t[] = {tau};
    return coincidence_numeric_curve(config, f0, t, spec)[0];
}

std::vector<double> coincidence_numeric_curve(const SpectralModeConfig& config,
                                              const Envelope2D& f0,
                                              std::span<const double> taus,
                                              const QuadratureSpec& spec) {
    return pair_sweep(config, f0, Correlation::anti_correlated, taus, spec, true);
}

double noon_numeric(const SpectralModeConfig& config, double tau,
                    const QuadratureSpec& spec) {
    const double t[] = {tau};
    return noon_numeric_curve(config, t, spec)[0];
}

std::vector<double> noon_numeric_curve(const SpectralModeConfig& config,
                                       std::span<const double> taus,
                                       const QuadratureSpec& spec) {
    return pair_sweep(config,
                      gaussian_envelope2(config.mode_width, spec.truncation_sigmas),
                      Correlation::correlated, taus, spec, false);
}

double noon_numeric(const SpectralModeConfig& config, const Envelope2D& f0,
                    double tau, const QuadratureSpec& spec) {
    const double t[] = {tau};
    return noon_numeric_curve(config, f0, t, spec)[0];
}

std::vector<double> noon_numeric_curve(const SpectralModeConfig& config,
                                       const Envelope2D& f0,
                                       std::span<const double> taus,
                                       const QuadratureSpec& spec) {
    return pair_sweep(config, f0, Correlation::correlated, taus, spec, false);
}

double mzi_numeric(const SingleSpectrumConfig& config, double tau,
                   const QuadratureSpec& spec) {
    const double t[] = {tau};
    return mzi_numeric_curve(config, t, spec)[0];
}

std::vector<double> mzi_numeric_curve(const SingleSpectrumConfig& config,
                                      std::span<const double> taus,
                                      const QuadratureSpec& spec) {
    return mzi_numeric_curve(
        config, gaussian_envelope1(config.mode_width, spec.truncation_sigmas),
        taus, spec);
}

double mzi_numeric(const SingleSpectrumConfig& config, const Envelope1D& f0,
                   double tau, const QuadratureSpec& spec) {
    const double t[] = {tau};
    return mzi_numeric_curve(config, f0, t, spec)[0];
}

std::vector<double> mzi_numeric_curve(const SingleSpectrumConfig& config,
                                      const Envelope1D& f0,
                                      std::span<const double> taus,
                                      const QuadratureSpec& spec) {
    config.validate();
    spec.validate();
    if (!(f0.half_width > 0.0))
        throw std::invalid_argument("oracle: envelope support must be positive");
    const auto centers =
        mode_centers(config.n_modes, config.mode_spacing, config.center_frequency);
    const auto panels = mode_panels(centers, f0.half_width);
    auto f = [config, f0](double w) {
        double acc = 0.0;
        for (int k = 1; k <= config.n_modes; ++k)
            acc += f0.f(w - config.center_frequency - config.mode_offset(k));
        return acc;
    };
    auto make = [&](int ppm) { return Grid1D(build_axis(panels, ppm), f); };
    auto use = [&](const Grid1D& g, double tau) {
        if (!(g.norm() > 0.0))
            throw std::invalid_argument("oracle: envelope integrates to zero");
        return 0.5 * (1.0 + g.cosw(tau) / g.norm());
    };
    return refined_sweep<Grid1D>(spec, make, use, taus);
}

double cross_term_weight(const SpectralModeConfig& config) {
    config.validate();
    if (config.n_modes == 1) return 0.0;
    const double r = config.mode_spacing / config.mode_width;
    const double r2 = r * r;
    double cross = 0.0;
    for (int j = 1; j <= config.n_modes; ++j) {
        for (int k = 1; k <= config.n_modes; ++k) {
            if (j == k) continue;
            const double d = static_cast<double>(j - k);
            cross += std::exp(-2.0 * d * d * r2);
        }
    }
    return cross / static_cast<double>(config.n_modes);
}

SampledProjection difference_frequency_projection(const SpectralModeConfig& config,
                                                  std::span<const double> omega_minus_grid,
                                                  const QuadratureSpec& spec) {
    return project_marginal(config, Correlation::anti_correlated, true,
                            omega_minus_grid, spec);
}

SampledProjection sum_frequency_projection(const SpectralModeConfig& config,
                                           std::span<const double> omega_plus_grid,
                                           const QuadratureSpec& spec) {
    return project_marginal(config, Correlation::correlated, false,
                            omega_plus_grid, spec);
}

}  // namespace interfero::oracle
