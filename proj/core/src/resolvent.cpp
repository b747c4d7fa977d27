#include "wfrac/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wfrac/errors.hpp"
#include "wfrac/parallel.hpp"
#include "wfrac/symbol.hpp"

namespace wfrac::resolvent {
namespace {

// phi1(x) = int_0^1 e^(-x u) du, phi2(x) = int_0^1 u e^(-x u) du.
void exponential_moments(Complex x, Complex& phi1, Complex& phi2) {
    if (std::abs(x) < 0.5) {
        Complex term(1.0, 0.0);  // (-x)^n / n!
        phi1 = phi2 = 0.0;
        for (int n = 0; n < 20; ++n) {
            phi1 += term / static_cast<double>(n + 1);
            phi2 += term / static_cast<double>(n + 2);
            term *= -x / static_cast<double>(n + 1);
        }
        return;
    }
    const Complex e = std::exp(-x);
    phi1 = (1.0 - e) / x;
    phi2 = (1.0 - e * (1.0 + x)) / (x * x);
}

// int_0^inf f(tau) e^(-s tau) dtau for the piecewise-linear interpolant of f.
Complex forcing_transform(const SampledFunction& f, Complex s) {
    auto pts = f.grid.points();
    Complex acc(0.0, 0.0);
    double a = 0.0;
    double fa = f.value_at_zero;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double b = pts[i], fb = f.values[i];
        const double h = b - a;
        Complex phi1, phi2;
        exponential_moments(s * h, phi1, phi2);
        acc += std::exp(-s * a) * (fa * h * phi1 + (fb - fa) * h * phi2);
        a = b;
        fa = fb;
    }
    return acc;
}

}  // namespace

void ModalProblem::validate() const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("mode eigenvalue must be finite and >= 0, got " + std::to_string(lambda));
    }
    if (!std::isfinite(u0)) throw DomainError("initial coefficient must be finite");
    if (forcing) forcing->validate();
}

Complex mode_transform(const ModalProblem& mp, Complex s) {
    const Complex phi = symbol::eval_phi(mp.params, s);
    const Complex denom = phi + mp.lambda;
    Complex value(0.0, 0.0);
    if (mp.u0 != 0.0) value += phi / (s * denom) * mp.u0;
    if (mp.forcing) value += forcing_transform(*mp.forcing, s) / denom;
    return value;
}

namespace {

void check_admissible(const ModalProblem& mp, bool allow_experimental) {
    if (!mp.params.evolution_admissible() && !allow_experimental) {
        throw AdmissibilityError("evolution solver requires beta <= 1 (" + mp.params.describe() +
                                 "); pass the experimental bypass to run anyway");
    }
}

// Breakpoint tau_j of the forcing interpolant with the jump in value (step) and in
// slope (ramp) it introduces there.
struct Kink {
    double tau, step, ramp;
};

std::vector<Kink> forcing_kinks(const SampledFunction& f) {
    auto pts = f.grid.points();
    std::vector<Kink> kinks;
    kinks.reserve(pts.size() + 1);
    double a = 0.0, fa = f.value_at_zero, slope = 0.0;
    kinks.push_back({0.0, fa, 0.0});
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double next = (f.values[i] - fa) / (pts[i] - a);
        kinks.back().ramp += next - slope;
        slope = next;
        a = pts[i];
        fa = f.values[i];
        kinks.push_back({a, 0.0, 0.0});
    }
    kinks.back().step = -fa;
    kinks.back().ramp = -slope;
    return kinks;
}

double invert_mode(const ModalProblem& mp, const std::vector<Kink>& kinks, double t,
                   const laplace::TalbotConfig& cfg) {
    const FracParams& p = mp.params;
    double u = 0.0;
    if (mp.u0 != 0.0) {
        u += mp.u0 * laplace::invert(cfg,
                                     [&](Complex s) {
                                         const Complex phi = symbol::eval_phi(p, s);
                                         return phi / (s * (phi + mp.lambda));
                                     },
                                     t);
    }
    // A step of height a and a ramp of slope b starting at tau respond with
    // L^-1[(a/s + b/s^2) / (Phi + lambda)] evaluated at t - tau.
    for (const Kink& k : kinks) {
        if (!(k.tau < t) || (k.step == 0.0 && k.ramp == 0.0)) continue;
        u += laplace::invert(cfg,
                             [&](Complex s) {
                                 return (k.step / s + k.ramp / (s * s)) / (symbol::eval_phi(p, s) + mp.lambda);
                             },
                             t - k.tau);
    }
    return u;
}

double invert_mode(const ModalProblem& mp, double t, const laplace::TalbotConfig& cfg) {
    return invert_mode(mp, mp.forcing ? forcing_kinks(*mp.forcing) : std::vector<Kink>{}, t, cfg);
}

}  // namespace

double solve_mode_at(const ModalProblem& mp, double t, const laplace::TalbotConfig& cfg,
                     bool allow_experimental) {
    mp.validate();
    check_admissible(mp, allow_experimental);
    return invert_mode(mp, t, cfg);
}

ModeSolution solve_mode(const ModalProblem& mp, const TimeGrid& grid, const laplace::TalbotConfig& cfg,
                        bool allow_experimental) {
    mp.validate();
    cfg.validate();
    check_admissible(mp, allow_experimental);
    const bool experimental = !mp.params.evolution_admissible();
    const std::vector<Kink> kinks = mp.forcing ? forcing_kinks(*mp.forcing) : std::vector<Kink>{};
    auto at = [&](double t) { return invert_mode(mp, kinks, t, cfg); };

    std::vector<double> values(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { values[i] = at(grid[i]); });

    double deviation = 0.0;
    for (double t : {1e-6, 1e-7, 1e-8}) deviation = std::max(deviation, std::abs(at(t) - mp.u0));

    return ModeSolution{SampledFunction{grid, std::move(values), mp.u0}, deviation, experimental};
}

double resolvent_kernel(const FracParams& p, double lambda, double t, const laplace::TalbotConfig& cfg) {
    if (!(lambda >= 0.0)) throw DomainError("lambda must be >= 0");
    return laplace::invert(cfg, [&](Complex s) { return 1.0 / (symbol::eval_phi(p, s) + lambda); }, t);
}

double relaxation_function(const FracParams& p, double lambda, double t, const laplace::TalbotConfig& cfg) {
    if (!(lambda >= 0.0)) throw DomainError("lambda must be >= 0");
    return laplace::invert(cfg,
                           [&](Complex s) {
                               Complex phi = symbol::eval_phi(p, s);
                               return phi / (s * (phi + lambda));
                           },
                           t);
}

double smoothing_probe(const FracParams& p, double gamma_exp, const laplace::TalbotConfig& cfg, double t_min,
                       double t_max) {
    if (!(gamma_exp >= 0.0 && gamma_exp <= 1.0)) {
        throw DomainError("smoothing exponent must lie in [0, 1]");
    }
    if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
        throw DomainError("smoothing window needs 0 < t_min < t_max");
    }
    constexpr int kTimes = 21;
    constexpr int kLambdas = 61;
    std::vector<double> log_t(kTimes), log_m(kTimes);
    parallel_for(kTimes, [&](std::size_t i) {
        const double t = t_min * std::pow(t_max / t_min, static_cast<double>(i) / (kTimes - 1));
        double sup = 0.0;
        for (int j = 0; j < kLambdas; ++j) {
            const double lambda = std::pow(10.0, -2.0 + 6.0 * j / (kLambdas - 1));
            sup = std::max(sup, std::pow(lambda, gamma_exp) * std::abs(relaxation_function(p, lambda, t, cfg)));
        }
        log_t[i] = std::log(t);
        log_m[i] = std::log(sup);
    });

    double mean_x = 0.0, mean_y = 0.0;
    for (int i = 0; i < kTimes; ++i) {
        mean_x += log_t[i];
        mean_y += log_m[i];
    }
    mean_x /= kTimes;
    mean_y /= kTimes;
    double sxy = 0.0, sxx = 0.0;
    for (int i = 0; i < kTimes; ++i) {
        sxy += (log_t[i] - mean_x) * (log_m[i] - mean_y);
        sxx += (log_t[i] - mean_x) * (log_t[i] - mean_x);
    }
    return sxy / sxx;
}

ResolventBoundReport resolvent_bound_probe(const FracParams& p, const std::vector<double>& lambdas,
                                           const std::vector<double>& times,
                                           const laplace::TalbotConfig& cfg) {
    ResolventBoundReport report;
    for (double t : times) {
        for (const laplace::ContourNode& node : laplace::talbot_contour(cfg, t)) {
            const Complex phi = symbol::eval_phi(p, node.s);
            if (phi.real() < 0.0) {
                ++report.nodes_left_half;
                continue;
            }
            for (double lambda : lambdas) {
                report.max_ratio = std::max(report.max_ratio, std::abs(phi) / std::abs(phi + lambda));
                ++report.nodes_checked;
            }
        }
    }
    return report;
}

}  // namespace wfrac::resolvent
