#pragma once

#include <complex>
#include <string>

namespace wfrac {

/// Points of the Laplace variable. std::arg reports the principal argument in (-pi, pi].
using Complex = std::complex<double>;

/// The operator order pair (alpha, beta).
///
/// alpha in (0,1) fixes the high-frequency (Caputo) scaling, beta >= 0 tunes the
/// low-frequency regime. The symbolic and Volterra constructions are valid for every
/// beta >= 0; positivity of the memory kernel and the evolution theory need beta <= 1.
class FracParams {
public:
    /// Throws DomainError unless 0 < alpha < 1 and beta >= 0 (both finite).
    FracParams(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    /// 1 - alpha: both the scale in front of s^(alpha-1) and the Prabhakar order.
    double memory_scale() const noexcept { return 1.0 - alpha_; }

    bool evolution_admissible() const noexcept { return beta_ <= 1.0; }

    std::string describe() const;

    friend bool operator==(const FracParams&, const FracParams&) = default;

private:
    double alpha_;
    double beta_;
};

}  // namespace wfrac
