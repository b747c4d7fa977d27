#pragma once

#include "wfrac/laplace.hpp"
#include "wfrac/params.hpp"
#include "wfrac/special.hpp"
#include "wfrac/time_grid.hpp"

/// The memory kernel w, the inverse kernel k and the Volterra operators built on them.
namespace wfrac::kernels {

enum class KernelPath {
    automatic,  ///< certified series when available, Talbot inversion otherwise
    series,     ///< series only; AccuracyError when it cannot be certified
    talbot,     ///< Laplace inversion only
};

/// g(t) = scale t^(mu-1) E^gamma_{rho,mu}(-(1-alpha) t^rho) with rho = 1-alpha.
/// Its Laplace transform is scale s^(-mu) h(s)^gamma, so w (gamma = beta, mu = 1-alpha),
/// k (gamma = -beta, mu = alpha) and all their antiderivatives are members of the family.
class PrabhakarKernel {
public:
    PrabhakarKernel(const FracParams& p, double gamma, double mu, double scale = 1.0,
                    laplace::TalbotConfig talbot = {});

    /// Throws DomainError for t <= 0.
    double operator()(double t, KernelPath path = KernelPath::automatic) const;

    /// Series value if it certifies special::kSeriesTolerance, std::nullopt otherwise.
    std::optional<double> series_value(double t) const;
    double talbot_value(double t) const;

    Complex transform(Complex s) const;

    /// Kernel of int_0^t g, i.e. mu raised by order.
    PrabhakarKernel antiderivative(int order = 1) const;

    const FracParams& params() const noexcept { return params_; }
    double gamma() const noexcept { return gamma_; }
    double mu() const noexcept { return mu_; }

private:
    FracParams params_;
    double gamma_, mu_, scale_;
    laplace::TalbotConfig talbot_;
    special::PrabhakarSeries series_;
};

/// w(t) = t^(-alpha) E^beta_{1-alpha,1-alpha}(-(1-alpha) t^(1-alpha)); transform Phi(s)/s.
PrabhakarKernel w_kernel(const FracParams& p, laplace::TalbotConfig talbot = {});

/// k(t) = t^(alpha-1) E^(-beta)_{1-alpha,alpha}(-(1-alpha) t^(1-alpha)); transform 1/Phi(s).
PrabhakarKernel k_kernel(const FracParams& p, laplace::TalbotConfig talbot = {});

/// The W-derivative of t^alpha: Gamma(1+alpha) E^beta_{1-alpha,1}(-(1-alpha) t^(1-alpha)).
PrabhakarKernel power_response(const FracParams& p, laplace::TalbotConfig talbot = {});

double eval_w(const FracParams& p, double t, KernelPath path = KernelPath::automatic);
double eval_k(const FracParams& p, double t, KernelPath path = KernelPath::automatic);

/// Caputo kernel t^(-alpha) / Gamma(1-alpha).
double caputo_kernel(double alpha, double t);

/// Empirical constant in |k(t)| <= C t^(alpha-1) on (0, 1], maximised over a
/// 200-point logarithmic grid on [1e-8, 1].
struct OriginBound {
    double constant;
    double t_at_max;
};
OriginBound inverse_kernel_origin_bound(const FracParams& p);

/// Samples of int_0^t u'(s) w(t-s) ds at the grid points.
///
/// The t^alpha component of u near the origin is fitted from the first three
/// samples, removed and added back through power_response. The remainder is
/// differentiated with second-order three-point differences (one-sided at the ends)
/// and its derivative is treated as piecewise linear; cell moments of w come from
/// its exact first and second antiderivatives. For beta > 1 the result has no
/// positivity backing; see FracParams::evolution_admissible.
/// Throws DomainError for fewer than 3 samples.
SampledFunction w_derivative(const FracParams& p, const SampledFunction& u);

/// Samples of int_0^t k(t-s) f(s) ds, f piecewise linear through (0, f(0)) and the
/// samples, with exact moments of k. Throws DomainError for fewer than 3 samples.
SampledFunction w_integral(const FracParams& p, const SampledFunction& f);

/// max over grid points other than the first and last of
/// |w_derivative(w_integral(f)) - f| / (1 + |f|).
double ftc_roundtrip_residual(const FracParams& p, const SampledFunction& f);

}  // namespace wfrac::kernels
