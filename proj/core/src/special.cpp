#include "wfrac/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wfrac/errors.hpp"

namespace wfrac::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kGammaOverflow = 171.6243769563027;

// 1/Gamma(x) for x > 0, without overflow for large x.
double reciprocal_gamma(double x) {
    if (x < 170.0) return 1.0 / std::tgamma(x);
    return std::exp(-std::lgamma(x));
}

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + carry; }
};

}  // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
    if (x <= 0.0 && x == std::floor(x)) {
        throw DomainError("gamma: pole at non-positive integer " + std::to_string(x));
    }
    if (x > kGammaOverflow) {
        throw DomainError("gamma: overflow for x = " + std::to_string(x) + " > 171.62");
    }
    return std::tgamma(x);
}

double pochhammer(double x, int n) {
    if (n < 0) throw DomainError("pochhammer: negative order");
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= x + k;
    return r;
}

PrabhakarSeries::PrabhakarSeries(double gamma, double rho, double mu)
    : gamma_(gamma), rho_(rho), mu_(mu) {
    if (!std::isfinite(gamma) || !std::isfinite(rho) || !std::isfinite(mu)) {
        throw DomainError("Prabhakar parameters must be finite");
    }
    if (!(rho > 0.0) || !(mu > 0.0)) {
        throw DomainError("Prabhakar parameters need rho > 0 and mu > 0");
    }
    if (gamma <= 0.0 && gamma == std::floor(gamma) && gamma > -kMaxSeriesTerms) {
        polynomial_degree_ = static_cast<int>(-gamma);
    }

    // Tabulate (gamma)_n / (n! Gamma(rho n + mu)). The table stops once the
    // coefficients are negligible even at |z| = kSeriesRadius.
    coeffs_.reserve(64);
    double pochhammer_ratio = 1.0;  // (gamma)_n / n!
    double peak = 0.0;
    double radius_pow = 1.0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        double c = pochhammer_ratio * reciprocal_gamma(rho * n + mu);
        coeffs_.push_back(c);
        if (n == polynomial_degree_) break;

        double bound = std::abs(c) * radius_pow;
        peak = std::max(peak, bound);
        if (n > 8 && bound < 1e-30 * peak) break;

        // (gamma)_{n+1} = (gamma)_n (gamma + n); the factorial ratio is folded in.
        pochhammer_ratio *= (gamma + n) / static_cast<double>(n + 1);
        radius_pow *= kSeriesRadius;
        if (!std::isfinite(radius_pow)) radius_pow = std::numeric_limits<double>::max();
    }
}

SeriesSum PrabhakarSeries::sum(double z) const {
    CompensatedSum acc;
    double abs_sum = 0.0;
    double max_partial = 0.0;
    double z_pow = 1.0;
    int small_run = 0;
    int n = 0;
    bool converged = false;
    const int available = static_cast<int>(coeffs_.size());

    for (; n < available; ++n) {
        double term = coeffs_[n] * z_pow;
        if (!std::isfinite(term)) {
            throw ConvergenceError("Prabhakar series overflow at term " + std::to_string(n));
        }
        acc.add(term);
        abs_sum += std::abs(term);
        max_partial = std::max(max_partial, std::abs(acc.value()));
        if (std::abs(term) <= 1e-16 * max_partial) {
            if (++small_run >= 2) {
                converged = true;
                ++n;
                break;
            }
        } else {
            small_run = 0;
        }
        z_pow *= z;
    }
    // The table ends early only when the remaining coefficients are negligible for
    // every |z| <= kSeriesRadius (or when the series is a polynomial).
    if (!converged) {
        bool table_truncated = available < kMaxSeriesTerms;
        if (!(terminates() || (table_truncated && std::abs(z) <= kSeriesRadius))) {
            throw ConvergenceError("Prabhakar series did not converge within " +
                                   std::to_string(kMaxSeriesTerms) + " terms at z = " +
                                   std::to_string(z));
        }
    }

    double value = acc.value();
    double rel = value != 0.0 ? 2.0 * kEps * abs_sum / std::abs(value)
                              : (abs_sum == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    return SeriesSum{value, abs_sum, n, rel};
}

std::optional<double> PrabhakarSeries::try_evaluate(double z, double tolerance) const {
    if (!std::isfinite(z) || (!terminates() && std::abs(z) > kSeriesRadius)) return std::nullopt;
    try {
        SeriesSum s = sum(z);
        if (s.relative_error <= tolerance) return s.value;
    } catch (const ConvergenceError&) {
    }
    return std::nullopt;
}

double prabhakar(const PrabhakarArgs& args) {
    if (!std::isfinite(args.z)) throw DomainError("Prabhakar: non-finite argument");
    PrabhakarSeries series(args.gamma, args.rho, args.mu);
    if (!series.terminates() && std::abs(args.z) > kSeriesRadius) {
        throw AccuracyError("Prabhakar series requested at |z| = " + std::to_string(std::abs(args.z)) +
                            " beyond the series radius " + std::to_string(kSeriesRadius) +
                            "; use the Laplace-inversion path");
    }
    SeriesSum s = series.sum(args.z);
    if (s.relative_error > kSeriesTolerance) {
        throw AccuracyError("Prabhakar series at z = " + std::to_string(args.z) +
                            " loses too many digits to cancellation (estimated relative error " +
                            std::to_string(s.relative_error) + ")");
    }
    return s.value;
}

double mittag_leffler(double alpha, double x) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("Mittag-Leffler: alpha must lie in (0,1]");
    if (!std::isfinite(x)) throw DomainError("Mittag-Leffler: non-finite argument");
    if (x > 0.0) throw DomainError("Mittag-Leffler: only x <= 0 is supported");
    if (x == 0.0) return 1.0;
    if (alpha == 1.0) return std::exp(x);

    if (-x <= kSeriesRadius) {
        if (auto v = PrabhakarSeries(1.0, alpha, 1.0).try_evaluate(x, 1e-12)) return *v;
    }

    using boost::math::quadrature::gauss_kronrod;
    const double big_x = -x;
    const double c = std::cos(std::numbers::pi * alpha);
    const double inv_alpha = 1.0 / alpha;
    auto integrand = [=](double y) {
        return std::exp(-std::pow(y, inv_alpha)) * big_x / (y * y + 2.0 * big_x * y * c + big_x * big_x);
    };

    // exp(-y^(1/alpha)) < 1e-21 beyond y_end. The denominator peaks at -x cos(pi alpha)
    // when cos < 0; that point becomes a breakpoint so the adaptive rule sees it.
    const double y_end = std::pow(48.0, alpha);
    std::vector<double> cuts{0.0, std::min(1.0, y_end), y_end};
    if (c < 0.0) {
        double peak = -big_x * c;
        if (peak > 0.0 && peak < y_end) cuts.push_back(peak);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += gauss_kronrod<double, 31>::integrate(integrand, cuts[i], cuts[i + 1], 15, 1e-11);
    }
    return std::sin(std::numbers::pi * alpha) / (std::numbers::pi * alpha) * total;
}

}  // namespace wfrac::special
