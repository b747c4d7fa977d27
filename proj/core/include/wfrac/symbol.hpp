#pragma once

#include "wfrac/params.hpp"

/// The Laplace symbol Phi(s) = s^alpha / (1 + (1-alpha) s^(alpha-1))^beta, its
/// auxiliary factor h(s) = 1 / (1 + (1-alpha) s^(alpha-1)), and numerical probes of
/// their structure (low-frequency exponent, convexity near the origin).
///
/// Complex powers use the principal branch. Points on the cut (arg s = pi) and the
/// origin are rejected with DomainError. Real arguments are evaluated through the
/// complex path with zero imaginary part so both agree bit for bit.
namespace wfrac::symbol {

Complex eval_phi(const FracParams& p, Complex s);
double eval_phi(const FracParams& p, double s);

Complex eval_h(const FracParams& p, Complex s);
double eval_h(const FracParams& p, double s);

/// log h(s) on the principal branch. Stays accurate where h underflows.
Complex log_h(const FracParams& p, Complex s);

/// h'(s) = (1-alpha)^2 s^(alpha-2) / (1 + (1-alpha) s^(alpha-1))^2 for s > 0.
double h_derivative(const FracParams& p, double s);

struct FitWindow {
    double s_min;
    double s_max;
    int points;
};

/// Window on which log|Phi| is regressed against log s.
///
/// The local slope differs from alpha + beta(1-alpha) by at most beta s^(1-alpha),
/// so the upper end is pulled below 1e-3 until that correction is under 1e-3; the
/// window always spans three decades.
FitWindow low_freq_fit_window(const FracParams& p);

/// Least-squares slope of log|Phi(s)| against log s on low_freq_fit_window(p).
/// Approximates the small-|s| exponent alpha + beta(1-alpha).
double low_freq_exponent_estimate(const FracParams& p);

/// (Phi(s0+h) - 2 Phi(s0) + Phi(s0-h)) / h^2 with h = s0/10.
/// Positive means Phi is locally convex at s0. Requires 0 < s0 <= 1e-2.
double convexity_probe_at_origin(const FracParams& p, double s0);

}  // namespace wfrac::symbol
