#pragma once

#include <optional>
#include <vector>

#include "wfrac/laplace.hpp"
#include "wfrac/params.hpp"
#include "wfrac/time_grid.hpp"

/// Scalar modes D u + lambda u = f, u(0) = u0, solved in the Laplace domain.
namespace wfrac::resolvent {

struct ModalProblem {
    FracParams params;
    double lambda = 0.0;
    double u0 = 0.0;
    std::optional<SampledFunction> forcing;  ///< absent means f = 0

    /// Throws DomainError for lambda < 0 or non-finite data.
    void validate() const;
};

/// u^(s) = Phi(s) / (s (Phi(s) + lambda)) u0 + f^(s) / (Phi(s) + lambda).
///
/// f^ is the exact Laplace transform of the piecewise-linear interpolant of the
/// forcing samples (zero beyond the last sample).
Complex mode_transform(const ModalProblem& mp, Complex s);

struct ModeSolution {
    SampledFunction u;
    /// max |u(t) - u0| over t in {1e-6, 1e-7, 1e-8}; small when u(t) -> u0.
    double initial_deviation = 0.0;
    /// Set when beta > 1 was run through the bypass.
    bool experimental = false;
};

/// u at every grid point by Talbot inversion of mode_transform. The forcing term is
/// inverted piece by piece: the interpolant is a sum of delayed steps and ramps, and
/// each delayed piece is inverted at its own elapsed time t - tau_j, so no contour
/// node ever sees e^(-s tau). Throws AdmissibilityError for beta > 1 unless allow_experimental is set.
ModeSolution solve_mode(const ModalProblem& mp, const TimeGrid& grid,
                        const laplace::TalbotConfig& cfg = {}, bool allow_experimental = false);

/// u(t) for a single time; same admissibility rule as solve_mode.
double solve_mode_at(const ModalProblem& mp, double t, const laplace::TalbotConfig& cfg = {},
                     bool allow_experimental = false);

/// Inverse transform of 1 / (Phi(s) + lambda).
double resolvent_kernel(const FracParams& p, double lambda, double t,
                        const laplace::TalbotConfig& cfg = {});

/// Inverse transform of Phi(s) / (s (Phi(s) + lambda)): the solution of the
/// homogeneous mode with u0 = 1.
double relaxation_function(const FracParams& p, double lambda, double t,
                           const laplace::TalbotConfig& cfg = {});

/// Least-squares slope of log M(t) against log t on 21 log-spaced t in [t_min, t_max],
/// where M(t) = max over 61 log-spaced lambda in [1e-2, 1e4] of
/// lambda^gamma_exp |relaxation_function(p, lambda, t)|. The slope tends to
/// -alpha gamma_exp as the window shrinks toward 0; for beta > 0 it steepens toward
/// -gamma_exp once t reaches the low-frequency regime of Phi.
double smoothing_probe(const FracParams& p, double gamma_exp, const laplace::TalbotConfig& cfg = {},
                       double t_min = 1e-2, double t_max = 1.0);

/// Pointwise check of |1/(Phi+lambda)| <= C / |Phi| on contour nodes.
struct ResolventBoundReport {
    double max_ratio = 0.0;        ///< max |Phi| / |Phi + lambda| over nodes with Re Phi >= 0
    std::size_t nodes_checked = 0;    ///< (node, lambda) pairs
    std::size_t nodes_left_half = 0;  ///< nodes whose image has Re Phi < 0 (reported only)
};

ResolventBoundReport resolvent_bound_probe(const FracParams& p, const std::vector<double>& lambdas,
                                           const std::vector<double>& times,
                                           const laplace::TalbotConfig& cfg = {});

}  // namespace wfrac::resolvent
