#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wfrac/errors.hpp"
#include "wfrac/laplace.hpp"
#include "wfrac/params.hpp"
#include "wfrac/time_grid.hpp"

/// D u = u_xx + f on (0,1) with u(0,t) = u(1,t) = 0, expanded in the Dirichlet
/// eigenpairs lambda_k = (k pi)^2, phi_k(x) = sqrt(2) sin(k pi x).
namespace wfrac::diffusion {

double eigenvalue(int k);
double eigenfunction(int k, double x);

struct DiffusionSetup {
    FracParams params{0.5, 0.0};
    int n_modes = 1;
    std::vector<double> initial_coeffs;  ///< u_k(0), k = 1..n_modes
    /// Empty, or one entry per mode (std::nullopt for unforced modes).
    std::vector<std::optional<SampledFunction>> forcing_coeffs;
    laplace::TalbotConfig talbot{};
    bool allow_experimental = false;  ///< run beta > 1 instead of rejecting it

    void validate() const;

    /// u0 = sin(pi x): a single active mode with coefficient 1/sqrt(2).
    static DiffusionSetup sine_mode(const FracParams& p, laplace::TalbotConfig talbot = {});
};

/// <u0, phi_k> for k = 1..n_modes by 16-point Gauss-Legendre on max(8, 2 n_modes)
/// equal panels.
std::vector<double> project_initial(const std::function<double(double)>& u0, int n_modes);

/// Same for the piecewise-linear interpolant of samples (x_j, u_j); x must be
/// strictly increasing from 0 to 1. Sample points are used as panel breaks.
std::vector<double> project_initial(std::span<const double> x, std::span<const double> u, int n_modes);

/// sum_{k > K} u_k(0)^2 = ||u0||^2 - sum_{k <= K} u_k(0)^2, clamped at 0.
double tail_energy_bound(const std::function<double(double)>& u0, std::span<const double> coeffs);

/// Mode amplitudes, modes[k-1][i] = u_k(t_i).
struct ModalSeries {
    TimeGrid grid;
    std::vector<std::vector<double>> modes;
};

/// Solves each active mode on the grid; modes with |u_k(0)| < 1e-14 and no forcing
/// stay zero. Throws AdmissibilityError for beta > 1 without the bypass.
ModalSeries run_diffusion(const DiffusionSetup& setup, const TimeGrid& grid);

/// E(t_i) = sum_k u_k(t_i)^2.
std::vector<double> energy(const ModalSeries& series);

/// E(0) = sum_k u_k(0)^2.
double initial_energy(const DiffusionSetup& setup);

/// E(t) at a single time, one inversion per active mode.
double energy_at(const DiffusionSetup& setup, double t);

enum class SlopeDefinition {
    log10e_vs_t,      ///< d log10(E/E0) / dt
    log10e_vs_log10t, ///< d log10(E/E0) / d log10 t
};

enum class HalfLifeBasis {
    energy,     ///< E/E0 = 1/2
    amplitude,  ///< sqrt(E/E0) = 1/2
};

const char* to_string(SlopeDefinition d) noexcept;
const char* to_string(HalfLifeBasis b) noexcept;
/// Accepts the CLI spellings "log10e-vs-t" and "log10e-vs-log10t".
SlopeDefinition parse_slope_definition(const std::string& text);

struct MetricConfig {
    SlopeDefinition slope_definition = SlopeDefinition::log10e_vs_t;
    double fit_tmin = 0.1;
    double fit_tmax = 1.0;
    int fit_points = 50;
    HalfLifeBasis basis = HalfLifeBasis::energy;

    void validate() const;
    std::string describe() const;
};

struct DecayMetrics {
    double slope = 0.0;
    double half_life = 0.0;  ///< NaN only inside NoCrossingError::partial
    SlopeDefinition slope_definition = SlopeDefinition::log10e_vs_t;
    double fit_tmin = 0.0;
    double fit_tmax = 0.0;
    HalfLifeBasis basis = HalfLifeBasis::energy;
    GridSpec grid_spec;
};

/// The normalized energy never reached the half-life threshold on the grid.
class NoCrossingError : public Error {
public:
    NoCrossingError(const std::string& what, DecayMetrics partial)
        : Error(ErrorKind::no_crossing, what), partial_(partial) {}

    /// Slope and metadata are valid; half_life is NaN.
    const DecayMetrics& partial() const noexcept { return partial_; }

private:
    DecayMetrics partial_;
};

/// Re-evaluates E at arbitrary t; used to refine the half-life and to sample the
/// fit window exactly.
using EnergyEvaluator = std::function<double(double)>;

/// Slope and half-life of E on the grid, with E(0) = e0.
///
/// The slope is the least-squares fit over cfg.fit_points points of the fit window
/// (uniform in t, or in log10 t for the log-log definition). The half-life bracket is
/// the first grid interval where the threshold is crossed, [0, t_0] if it is crossed
/// before the first point; it is bisected on `exact` to min(1e-6, 1e-6 t) when given.
/// Without an evaluator both use log10(E/e0) interpolated linearly in t (or log10 t).
DecayMetrics decay_metrics(std::span<const double> E, const TimeGrid& grid, double e0,
                           const MetricConfig& cfg = {}, const EnergyEvaluator& exact = {});

/// True when E[i+1] <= E[i] + slack for every i.
bool is_nonincreasing(std::span<const double> E, double slack);

/// 200 log-spaced points on [1e-6, 5].
TimeGrid default_sweep_grid();

struct SweepRow {
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<DecayMetrics> metrics;
    /// Largest E[i+1] - E[i] on the grid; <= 1e-9 counts as monotone.
    double max_increase = 0.0;
    bool monotone = false;
    std::optional<ErrorKind> error_kind;
    std::string error;
};

inline constexpr double kMonotoneSlack = 1e-9;

/// Runs every (alpha, beta) cell on `grid` with the modes, forcing and contour of
/// `base`. Cells run concurrently; rows come back in alpha-major input order and a
/// failing cell records its error instead of aborting the sweep.
std::vector<SweepRow> sensitivity_sweep(std::span<const double> alphas, std::span<const double> betas,
                                        const DiffusionSetup& base, const TimeGrid& grid,
                                        const MetricConfig& cfg = {});

/// Published slope / half-life pairs for u0 = sin(pi x), kept for side-by-side output.
struct ReferenceRow {
    double alpha, beta, slope, half_life;
};
std::span<const ReferenceRow> reference_table();
std::optional<ReferenceRow> reference_value(double alpha, double beta);

}  // namespace wfrac::diffusion
