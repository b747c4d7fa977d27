#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>

#include "cli.hpp"
#include "wfrac/diffusion.hpp"
#include "wfrac/kernels.hpp"
#include "wfrac/laplace.hpp"
#include "wfrac/special.hpp"

namespace wfrac::cli {
namespace {

struct SuiteResult {
    bool pass;
    std::string detail;
};

SuiteResult reference_pairs() {
    const laplace::TalbotConfig cfg;
    struct Pair {
        const char* name;
        std::function<Complex(Complex)> F;
        std::function<double(double)> f;
        double t_max;
    };
    const double alpha = 0.5;
    const Pair pairs[] = {
        {"1/s", [](Complex s) { return 1.0 / s; }, [](double) { return 1.0; }, 10.0},
        {"1/s^2", [](Complex s) { return 1.0 / (s * s); }, [](double t) { return t; }, 10.0},
        {"1/(s+1)", [](Complex s) { return 1.0 / (s + 1.0); }, [](double t) { return std::exp(-t); }, 10.0},
        // e^(-5t) drops below the contour's absolute rounding floor past t ~ 2.
        {"1/(s+5)", [](Complex s) { return 1.0 / (s + 5.0); }, [](double t) { return std::exp(-5.0 * t); }, 2.0},
        {"s^-0.5", [](Complex s) { return std::pow(s, -0.5); },
         [](double t) { return 1.0 / std::sqrt(std::numbers::pi * t); }, 10.0},
        {"mittag-leffler", [&](Complex s) { return std::pow(s, alpha - 1.0) / (std::pow(s, alpha) + 1.0); },
         [&](double t) { return special::mittag_leffler(alpha, -std::pow(t, alpha)); }, 10.0},
    };
    double worst = 0.0;
    const char* worst_name = "";
    for (const Pair& p : pairs) {
        const auto grid = TimeGrid::logarithmic(0.05, p.t_max, 40);
        for (double t : grid.points()) {
            double err = std::abs(laplace::invert(cfg, p.F, t) / p.f(t) - 1.0);
            if (err > worst) {
                worst = err;
                worst_name = p.name;
            }
        }
    }
    return {worst <= 1e-6, "max relative error " + format_number(worst) + " (" + worst_name + ")"};
}

SuiteResult caputo_reductions() {
    double worst_series = 0.0, worst_talbot = 0.0;
    for (double alpha : {0.3, 0.5, 0.7, 0.9}) {
        const FracParams p(alpha, 0.0);
        const auto w = kernels::w_kernel(p);
        const auto k = kernels::k_kernel(p);
        const double gw = special::gamma_fn(1.0 - alpha), gk = special::gamma_fn(alpha);
        const auto grid = TimeGrid::logarithmic(1e-3, 1e2, 30);
        for (double t : grid.points()) {
            const double w_ref = std::pow(t, -alpha) / gw, k_ref = std::pow(t, alpha - 1.0) / gk;
            worst_series = std::max({worst_series, std::abs(w(t, kernels::KernelPath::series) / w_ref - 1.0),
                                     std::abs(k(t, kernels::KernelPath::series) / k_ref - 1.0)});
            worst_talbot = std::max({worst_talbot, std::abs(w(t, kernels::KernelPath::talbot) / w_ref - 1.0),
                                     std::abs(k(t, kernels::KernelPath::talbot) / k_ref - 1.0)});
        }
    }
    return {worst_series <= 1e-9 && worst_talbot <= 1e-6,
            "series " + format_number(worst_series) + ", talbot " + format_number(worst_talbot)};
}

SuiteResult ftc_roundtrip() {
    const TimeGrid grid = TimeGrid::graded(2.0, 128, 2.0);
    double worst = 0.0;
    for (double beta : {0.0, 1.0}) {
        const FracParams p(0.5, beta);
        worst = std::max(worst, kernels::ftc_roundtrip_residual(
                                    p, SampledFunction::sample(grid, [](double) { return 1.0; }, 1.0)));
        worst = std::max(worst, kernels::ftc_roundtrip_residual(
                                    p, SampledFunction::sample(grid, [](double t) { return std::sin(t); }, 0.0)));
    }
    return {worst <= 5e-3, "max residual " + format_number(worst)};
}

SuiteResult decay_trend() {
    const double alphas[] = {0.3};
    const double betas[] = {0.0, 0.5, 1.0};
    const auto base = diffusion::DiffusionSetup::sine_mode(FracParams(0.3, 0.0));
    const auto rows = diffusion::sensitivity_sweep(alphas, betas, base, diffusion::default_sweep_grid());
    bool ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ok = ok && rows[i].metrics && !rows[i].error_kind && rows[i].monotone;
        if (ok && i > 0) {
            ok = rows[i].metrics->half_life < rows[i - 1].metrics->half_life &&
                 std::abs(rows[i].metrics->slope) > std::abs(rows[i - 1].metrics->slope);
        }
    }
    std::string detail = "alpha=0.3 half-lives";
    for (const auto& r : rows) detail += " " + (r.metrics ? format_number(r.metrics->half_life) : std::string("-"));
    return {ok, detail};
}

}  // namespace

bool run_selftest(std::ostream& log) {
    struct Suite {
        const char* name;
        SuiteResult (*run)();
    };
    const Suite suites[] = {
        {"reference-pairs", reference_pairs},
        {"caputo-reductions", caputo_reductions},
        {"ftc-roundtrip", ftc_roundtrip},
        {"decay-trend", decay_trend},
    };
    bool all = true;
    for (const Suite& s : suites) {
        SuiteResult r{false, ""};
        try {
            r = s.run();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what()};
        }
        all = all && r.pass;
        log << (r.pass ? "PASS " : "FAIL ") << s.name << ": " << r.detail << "\n";
    }
    log << (all ? "selftest: all suites passed\n" : "selftest: FAILED\n");
    return all;
}

}  // namespace wfrac::cli
