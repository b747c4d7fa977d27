#include "wfrac/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wfrac/errors.hpp"

namespace wfrac::symbol {
namespace {

Complex checked_log(Complex s) {
    if (s == Complex(0.0, 0.0)) throw DomainError("Laplace symbol evaluated at s = 0");
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError("Laplace symbol evaluated at a non-finite point");
    }
    Complex log_s = std::log(s);
    if (std::abs(log_s.imag()) >= std::numbers::pi) {
        throw DomainError("Laplace symbol evaluated on the branch cut arg s = pi");
    }
    return log_s;
}

// log(1 + a s^(alpha-1)). The argument never crosses the negative real axis for
// |arg s| < pi, so the principal logarithm is the analytic continuation.
Complex log_denominator(const FracParams& p, Complex log_s) {
    Complex power = std::exp((p.alpha() - 1.0) * log_s);
    return std::log(1.0 + p.memory_scale() * power);
}

}  // namespace

Complex log_h(const FracParams& p, Complex s) {
    return -log_denominator(p, checked_log(s));
}

Complex eval_phi(const FracParams& p, Complex s) {
    Complex log_s = checked_log(s);
    Complex log_phi = p.alpha() * log_s;
    if (p.beta() != 0.0) log_phi -= p.beta() * log_denominator(p, log_s);
    return std::exp(log_phi);
}

double eval_phi(const FracParams& p, double s) { return eval_phi(p, Complex(s, 0.0)).real(); }

Complex eval_h(const FracParams& p, Complex s) { return std::exp(log_h(p, s)); }

double eval_h(const FracParams& p, double s) {
    if (!(s > 0.0)) throw DomainError("h is defined for s > 0 only, got " + std::to_string(s));
    return eval_h(p, Complex(s, 0.0)).real();
}

double h_derivative(const FracParams& p, double s) {
    if (!(s > 0.0)) throw DomainError("h' is defined for s > 0 only");
    double a = p.memory_scale();
    double denom = 1.0 + a * std::pow(s, p.alpha() - 1.0);
    return a * a * std::pow(s, p.alpha() - 2.0) / (denom * denom);
}

FitWindow low_freq_fit_window(const FracParams& p) {
    constexpr double kCorrection = 1e-3;
    double a = p.memory_scale();
    double s_max = 1e-3;
    if (p.beta() > 0.0) {
        double limit = std::pow(kCorrection / std::max(p.beta(), 1.0), 1.0 / a);
        s_max = std::min(s_max, limit);
    }
    return FitWindow{s_max * 1e-3, s_max, 25};
}

double low_freq_exponent_estimate(const FracParams& p) {
    FitWindow win = low_freq_fit_window(p);
    double lo = std::log(win.s_min), hi = std::log(win.s_max);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < win.points; ++i) {
        double x = lo + (hi - lo) * i / (win.points - 1);
        double y = std::log(std::abs(eval_phi(p, Complex(std::exp(x), 0.0))));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = win.points;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double convexity_probe_at_origin(const FracParams& p, double s0) {
    if (!(s0 > 0.0) || s0 > 1e-2) {
        throw DomainError("convexity probe needs 0 < s0 <= 1e-2, got " + std::to_string(s0));
    }
    double h = s0 / 10.0;
    double lower = s0 - h;
    if (!(lower > 0.0)) throw DomainError("convexity probe stencil reaches s <= 0");
    return (eval_phi(p, s0 + h) - 2.0 * eval_phi(p, s0) + eval_phi(p, lower)) / (h * h);
}

}  // namespace wfrac::symbol
