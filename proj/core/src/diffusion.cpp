#include "wfrac/diffusion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "wfrac/parallel.hpp"
#include "wfrac/resolvent.hpp"

namespace wfrac::diffusion {
namespace {

using Gauss16 = boost::math::quadrature::gauss<double, 16>;

constexpr double kInactiveMode = 1e-14;

std::vector<double> uniform_breaks(int panels) {
    std::vector<double> b(static_cast<std::size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i) b[i] = static_cast<double>(i) / panels;
    return b;
}

int panel_count(int n_modes) { return std::max(8, 2 * n_modes); }

std::vector<double> project_on_breaks(const std::function<double(double)>& u0,
                                      const std::vector<double>& breaks, int n_modes) {
    if (n_modes < 1) throw DomainError("need at least one mode");
    std::vector<double> coeffs(static_cast<std::size_t>(n_modes));
    for (int k = 1; k <= n_modes; ++k) {
        auto integrand = [&](double x) { return u0(x) * eigenfunction(k, x); };
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
            acc += Gauss16::integrate(integrand, breaks[i], breaks[i + 1]);
        }
        coeffs[k - 1] = acc;
    }
    return coeffs;
}

resolvent::ModalProblem mode_problem(const DiffusionSetup& setup, int k) {
    resolvent::ModalProblem mp{setup.params, eigenvalue(k), setup.initial_coeffs[k - 1], std::nullopt};
    if (!setup.forcing_coeffs.empty()) mp.forcing = setup.forcing_coeffs[k - 1];
    return mp;
}

bool mode_active(const DiffusionSetup& setup, int k) {
    bool forced = !setup.forcing_coeffs.empty() && setup.forcing_coeffs[k - 1].has_value();
    return forced || std::abs(setup.initial_coeffs[k - 1]) >= kInactiveMode;
}

double threshold(HalfLifeBasis basis) { return basis == HalfLifeBasis::energy ? 0.5 : 0.25; }


double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

// log10(E/e0) at t by linear interpolation in the abscissa `coord` (t or log10 t).
double interpolated_log_ratio(std::span<const double> E, const TimeGrid& grid, double e0, double t,
                              bool log_axis) {
    auto pts = grid.points();
    auto it = std::lower_bound(pts.begin(), pts.end(), t);
    std::size_t j = static_cast<std::size_t>(it - pts.begin());
    auto coord = [&](double s) { return log_axis ? std::log10(s) : s; };
    auto log_ratio = [&](std::size_t i) {
        if (!(E[i] > 0.0)) {
            throw AccuracyError("energy is not positive at t = " + std::to_string(pts[i]) +
                                "; cannot take its logarithm");
        }
        return std::log10(E[i] / e0);
    };
    if (j < pts.size() && pts[j] == t) return log_ratio(j);
    if (j == 0 || j == pts.size()) throw DomainError("interpolation point outside the grid");
    double x0 = coord(pts[j - 1]), x1 = coord(pts[j]);
    double y0 = log_ratio(j - 1), y1 = log_ratio(j);
    return y0 + (y1 - y0) * (coord(t) - x0) / (x1 - x0);
}

}  // namespace

double eigenvalue(int k) {
    if (k < 1) throw DomainError("mode index starts at 1");
    const double w = k * std::numbers::pi;
    return w * w;
}

double eigenfunction(int k, double x) {
    if (k < 1) throw DomainError("mode index starts at 1");
    return std::numbers::sqrt2 * std::sin(k * std::numbers::pi * x);
}

void DiffusionSetup::validate() const {
    if (n_modes < 1) throw DomainError("n_modes must be at least 1");
    if (initial_coeffs.size() != static_cast<std::size_t>(n_modes)) {
        throw DomainError("expected " + std::to_string(n_modes) + " initial coefficients, got " +
                          std::to_string(initial_coeffs.size()));
    }
    for (double c : initial_coeffs) {
        if (!std::isfinite(c)) throw DomainError("initial coefficients must be finite");
    }
    if (!forcing_coeffs.empty() && forcing_coeffs.size() != initial_coeffs.size()) {
        throw DomainError("forcing must be given for every mode or for none");
    }
    for (const auto& f : forcing_coeffs) {
        if (f) f->validate();
    }
    talbot.validate();
}

DiffusionSetup DiffusionSetup::sine_mode(const FracParams& p, laplace::TalbotConfig talbot) {
    DiffusionSetup setup;
    setup.params = p;
    setup.n_modes = 1;
    setup.initial_coeffs = {1.0 / std::numbers::sqrt2};
    setup.talbot = talbot;
    return setup;
}

std::vector<double> project_initial(const std::function<double(double)>& u0, int n_modes) {
    if (n_modes < 1) throw DomainError("need at least one mode");
    return project_on_breaks(u0, uniform_breaks(panel_count(n_modes)), n_modes);
}

std::vector<double> project_initial(std::span<const double> x, std::span<const double> u, int n_modes) {
    if (x.size() != u.size() || x.size() < 2) {
        throw DomainError("initial samples need matching x and u arrays with at least 2 points");
    }
    if (x.front() != 0.0 || x.back() != 1.0) throw DomainError("initial samples must span [0, 1]");
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1])) throw DomainError("sample abscissae must be strictly increasing");
    }
    auto interpolant = [x, u](double s) {
        auto it = std::upper_bound(x.begin(), x.end(), s);
        std::size_t j = std::clamp<std::size_t>(static_cast<std::size_t>(it - x.begin()), 1, x.size() - 1);
        return u[j - 1] + (u[j] - u[j - 1]) * (s - x[j - 1]) / (x[j] - x[j - 1]);
    };
    std::vector<double> breaks = uniform_breaks(panel_count(n_modes));
    breaks.insert(breaks.end(), x.begin(), x.end());
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return project_on_breaks(interpolant, breaks, n_modes);
}

double tail_energy_bound(const std::function<double(double)>& u0, std::span<const double> coeffs) {
    const std::vector<double> breaks = uniform_breaks(panel_count(static_cast<int>(coeffs.size())));
    double norm2 = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        norm2 += Gauss16::integrate([&](double x) { return u0(x) * u0(x); }, breaks[i], breaks[i + 1]);
    }
    double captured = 0.0;
    for (double c : coeffs) captured += c * c;
    return std::max(0.0, norm2 - captured);
}

ModalSeries run_diffusion(const DiffusionSetup& setup, const TimeGrid& grid) {
    setup.validate();
    ModalSeries series{grid, std::vector<std::vector<double>>(static_cast<std::size_t>(setup.n_modes),
                                                              std::vector<double>(grid.size(), 0.0))};
    parallel_for(static_cast<std::size_t>(setup.n_modes), [&](std::size_t idx) {
        const int k = static_cast<int>(idx) + 1;
        const resolvent::ModalProblem mp = mode_problem(setup, k);
        if (!mode_active(setup, k)) {
            // Still enforce the admissibility rule for skipped modes.
            if (!setup.params.evolution_admissible() && !setup.allow_experimental) {
                resolvent::solve_mode_at(mp, grid.front(), setup.talbot, false);
            }
            return;
        }
        series.modes[idx] =
            resolvent::solve_mode(mp, grid, setup.talbot, setup.allow_experimental).u.values;
    });
    return series;
}

std::vector<double> energy(const ModalSeries& series) {
    std::vector<double> e(series.grid.size(), 0.0);
    for (const auto& mode : series.modes) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += mode[i] * mode[i];
    }
    return e;
}

double initial_energy(const DiffusionSetup& setup) {
    double e = 0.0;
    for (double c : setup.initial_coeffs) e += c * c;
    return e;
}

double energy_at(const DiffusionSetup& setup, double t) {
    setup.validate();
    double e = 0.0;
    for (int k = 1; k <= setup.n_modes; ++k) {
        if (!mode_active(setup, k)) continue;
        double u = resolvent::solve_mode_at(mode_problem(setup, k), t, setup.talbot, setup.allow_experimental);
        e += u * u;
    }
    return e;
}

const char* to_string(SlopeDefinition d) noexcept {
    return d == SlopeDefinition::log10e_vs_t ? "log10e-vs-t" : "log10e-vs-log10t";
}

const char* to_string(HalfLifeBasis b) noexcept {
    return b == HalfLifeBasis::energy ? "energy" : "amplitude";
}

SlopeDefinition parse_slope_definition(const std::string& text) {
    if (text == "log10e-vs-t") return SlopeDefinition::log10e_vs_t;
    if (text == "log10e-vs-log10t") return SlopeDefinition::log10e_vs_log10t;
    throw DomainError("unknown slope definition '" + text + "'");
}

void MetricConfig::validate() const {
    if (!(fit_tmin > 0.0) || !(fit_tmax > fit_tmin) || !std::isfinite(fit_tmax)) {
        throw DomainError("fit window needs 0 < tmin < tmax");
    }
    if (fit_points < 2) throw DomainError("fit window needs at least 2 points");
}

std::string MetricConfig::describe() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "slope=%s fit_window=[%.10g,%.10g] fit_points=%d half_life_basis=%s",
                  to_string(slope_definition), fit_tmin, fit_tmax, fit_points, to_string(basis));
    return buf;
}

bool is_nonincreasing(std::span<const double> E, double slack) {
    for (std::size_t i = 1; i < E.size(); ++i) {
        if (E[i] > E[i - 1] + slack) return false;
    }
    return true;
}

DecayMetrics decay_metrics(std::span<const double> E, const TimeGrid& grid, double e0,
                           const MetricConfig& cfg, const EnergyEvaluator& exact) {
    cfg.validate();
    if (E.size() != grid.size()) throw DomainError("energy and grid lengths differ");
    if (!(e0 > 0.0) || !(E[0] > 0.0)) throw DomainError("energy must be positive at the start");
    if (cfg.fit_tmin < grid.front() || cfg.fit_tmax > grid.back()) {
        throw DomainError("fit window [" + std::to_string(cfg.fit_tmin) + ", " + std::to_string(cfg.fit_tmax) +
                          "] is outside the simulated range [" + std::to_string(grid.front()) + ", " +
                          std::to_string(grid.back()) + "]");
    }

    DecayMetrics m;
    m.slope_definition = cfg.slope_definition;
    m.fit_tmin = cfg.fit_tmin;
    m.fit_tmax = cfg.fit_tmax;
    m.basis = cfg.basis;
    m.grid_spec = grid.spec();

    const bool log_axis = cfg.slope_definition == SlopeDefinition::log10e_vs_log10t;
    std::vector<double> xs(static_cast<std::size_t>(cfg.fit_points));
    std::vector<double> ys(xs.size());
    for (int i = 0; i < cfg.fit_points; ++i) {
        const double u = static_cast<double>(i) / (cfg.fit_points - 1);
        double t = log_axis ? cfg.fit_tmin * std::pow(cfg.fit_tmax / cfg.fit_tmin, u)
                            : cfg.fit_tmin + (cfg.fit_tmax - cfg.fit_tmin) * u;
        if (i == cfg.fit_points - 1) t = cfg.fit_tmax;
        xs[i] = log_axis ? std::log10(t) : t;
        if (exact) {
            double e = exact(t);
            if (!(e > 0.0)) throw AccuracyError("energy is not positive at t = " + std::to_string(t));
            ys[i] = std::log10(e / e0);
        } else {
            ys[i] = interpolated_log_ratio(E, grid, e0, t, log_axis);
        }
    }
    m.slope = least_squares_slope(xs, ys);

    const double target = threshold(cfg.basis);
    std::size_t hit = E.size();
    for (std::size_t i = 0; i < E.size(); ++i) {
        if (E[i] / e0 <= target) {
            hit = i;
            break;
        }
    }
    if (hit == E.size()) {
        DecayMetrics partial = m;
        partial.half_life = std::numeric_limits<double>::quiet_NaN();
        throw NoCrossingError("normalized energy never reaches " + std::to_string(target) + " on [" +
                                  std::to_string(grid.front()) + ", " + std::to_string(grid.back()) + "]",
                              partial);
    }

    double lo = hit == 0 ? 0.0 : grid[hit - 1];
    double hi = grid[hit];
    if (exact) {
        const double tol = std::min(1e-6, 1e-6 * hi);
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (exact(mid) / e0 <= target) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        m.half_life = 0.5 * (lo + hi);
    } else {
        const double y_lo = hit == 0 ? 0.0 : std::log10(E[hit - 1] / e0);
        const double y_hi = std::log10(E[hit] / e0);
        const double y = std::log10(target);
        const double u = (y_lo - y) / (y_lo - y_hi);
        const bool log_axis = cfg.slope_definition == SlopeDefinition::log10e_vs_log10t && lo > 0.0;
        m.half_life = log_axis ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
    }
    return m;
}

TimeGrid default_sweep_grid() { return TimeGrid::logarithmic(1e-6, 5.0, 200); }

std::vector<SweepRow> sensitivity_sweep(std::span<const double> alphas, std::span<const double> betas,
                                        const DiffusionSetup& base, const TimeGrid& grid,
                                        const MetricConfig& cfg) {
    cfg.validate();
    std::vector<SweepRow> rows(alphas.size() * betas.size());
    parallel_for(rows.size(), [&](std::size_t idx) {
        SweepRow& row = rows[idx];
        row.alpha = alphas[idx / betas.size()];
        row.beta = betas[idx % betas.size()];
        try {
            DiffusionSetup setup = base;
            setup.params = FracParams(row.alpha, row.beta);
            const std::vector<double> e = energy(run_diffusion(setup, grid));
            row.max_increase = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 1; i < e.size(); ++i) row.max_increase = std::max(row.max_increase, e[i] - e[i - 1]);
            row.monotone = row.max_increase <= kMonotoneSlack;
            row.metrics = decay_metrics(e, grid, initial_energy(setup), cfg,
                                        [&setup](double t) { return energy_at(setup, t); });
        } catch (const NoCrossingError& err) {
            row.metrics = err.partial();
            row.error_kind = err.kind();
            row.error = err.what();
        } catch (const Error& err) {
            row.error_kind = err.kind();
            row.error = err.what();
        }
    });
    return rows;
}

std::span<const ReferenceRow> reference_table() {
    static constexpr std::array<ReferenceRow, 15> kTable{{
        {0.3, 0.0, -0.257, 0.308}, {0.3, 0.3, -0.292, 0.292}, {0.3, 0.5, -0.317, 0.282},
        {0.3, 0.7, -0.341, 0.273}, {0.3, 1.0, -0.378, 0.261}, {0.5, 0.0, -0.403, 0.265},
        {0.5, 0.3, -0.430, 0.254}, {0.5, 0.5, -0.448, 0.247}, {0.5, 0.7, -0.466, 0.240},
        {0.5, 1.0, -0.494, 0.231}, {0.9, 0.0, -0.608, 0.793}, {0.9, 0.3, -0.614, 0.775},
        {0.9, 0.5, -0.618, 0.763}, {0.9, 0.7, -0.622, 0.751}, {0.9, 1.0, -0.628, 0.733},
    }};
    return kTable;
}

std::optional<ReferenceRow> reference_value(double alpha, double beta) {
    for (const ReferenceRow& r : reference_table()) {
        if (std::abs(r.alpha - alpha) < 1e-12 && std::abs(r.beta - beta) < 1e-12) return r;
    }
    return std::nullopt;
}

}  // namespace wfrac::diffusion
