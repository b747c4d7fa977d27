#pragma once

#include <optional>
#include <vector>

/// Real-argument special functions: gamma, the three-parameter (Prabhakar)
/// Mittag-Leffler function and the classical Mittag-Leffler function E_alpha.
namespace wfrac::special {

/// Largest |z| for which the Prabhakar power series is attempted.
inline constexpr double kSeriesRadius = 5.0;

/// Hard cap on series terms; running into it is a ConvergenceError.
inline constexpr int kMaxSeriesTerms = 400;

/// Relative accuracy the series must be able to certify for a result to be accepted.
inline constexpr double kSeriesTolerance = 1e-10;

/// Gamma(x). Throws DomainError at poles (x a non-positive integer) and for non-finite
/// x; throws DomainError for x above the double-precision overflow point (~171.62).
double gamma_fn(double x);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), (x)_0 = 1. Requires n >= 0.
double pochhammer(double x, int n);

struct PrabhakarArgs {
    double gamma;  ///< Pochhammer parameter, any sign
    double rho;    ///< > 0
    double mu;     ///< > 0
    double z;
};

/// Outcome of a certified series summation.
struct SeriesSum {
    double value;
    double abs_sum;        ///< sum of |terms|, bounds the rounding error of value
    int terms;
    double relative_error; ///< a posteriori estimate: 2 eps abs_sum / |value|
};

/// E^gamma_{rho,mu}(z) = sum_n (gamma)_n z^n / (n! Gamma(rho n + mu)) for a fixed
/// (gamma, rho, mu). Coefficients are tabulated once, so repeated evaluation at
/// different z costs one compensated dot product. Immutable after construction.
class PrabhakarSeries {
public:
    PrabhakarSeries(double gamma, double rho, double mu);

    /// Compensated summation truncated once two successive terms drop below
    /// 1e-16 * (largest |partial sum| so far). Never throws on accuracy; callers
    /// inspect SeriesSum::relative_error. Throws ConvergenceError at the term cap.
    SeriesSum sum(double z) const;

    /// The value if |z| <= kSeriesRadius (any z for a polynomial) and the cancellation
    /// estimate is within tolerance, std::nullopt otherwise.
    std::optional<double> try_evaluate(double z, double tolerance = kSeriesTolerance) const;

    /// True when gamma is a non-positive integer: the series is a polynomial.
    bool terminates() const noexcept { return polynomial_degree_ >= 0; }

    /// Tabulated c_n = (gamma)_n / (n! Gamma(rho n + mu)); trailing coefficients that
    /// are negligible for every |z| <= kSeriesRadius are not stored.
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    double gamma() const noexcept { return gamma_; }
    double rho() const noexcept { return rho_; }
    double mu() const noexcept { return mu_; }

private:
    double gamma_, rho_, mu_;
    int polynomial_degree_ = -1;
    std::vector<double> coeffs_;
};

/// E^gamma_{rho,mu}(z) by the power series. Throws AccuracyError when |z| exceeds
/// kSeriesRadius for a non-terminating series or when cancellation prevents
/// certifying kSeriesTolerance; large arguments belong to the Laplace-inversion path
/// of the kernel evaluators.
double prabhakar(const PrabhakarArgs& args);

/// Classical E_alpha(x) = sum x^n / Gamma(alpha n + 1) for alpha in (0,1], x <= 0.
///
/// Uses the series where it is well conditioned and otherwise the positive
/// integral representation
///   E_alpha(-x) = sin(pi alpha)/(pi alpha) * int_0^inf exp(-y^(1/alpha)) x / (y^2 + 2 x y cos(pi alpha) + x^2) dy,
/// which has no cancellation. Throws DomainError for x > 0.
double mittag_leffler(double alpha, double x);

}  // namespace wfrac::special
