#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wfrac/errors.hpp"
#include "wfrac/symbol.hpp"

namespace wfrac {
namespace {

using symbol::eval_h;
using symbol::eval_phi;

TEST(FracParams, RejectsOutOfRange) {
    EXPECT_THROW(FracParams(0.0, 0.5), DomainError);
    EXPECT_THROW(FracParams(1.0, 0.5), DomainError);
    EXPECT_THROW(FracParams(0.5, -0.1), DomainError);
    EXPECT_THROW(FracParams(std::nan(""), 0.0), DomainError);
    EXPECT_THROW(FracParams(0.5, INFINITY), DomainError);
    EXPECT_TRUE(FracParams(0.5, 1.0).evolution_admissible());
    EXPECT_FALSE(FracParams(0.5, 1.5).evolution_admissible());
}

TEST(Symbol, PhiExamples) {
    EXPECT_NEAR(eval_phi(FracParams(0.5, 1.0), 1.0), 2.0 / 3.0, 1e-15);
    for (double a : {0.2, 0.5, 0.8}) EXPECT_NEAR(eval_phi(FracParams(a, 0.0), 4.0), std::pow(4.0, a), 1e-14);
    // 60-digit evaluation of the defining formula.
    EXPECT_NEAR(eval_phi(FracParams(0.3, 0.7), 0.2), 0.27578125474393047842, 1e-15);
}

TEST(Symbol, RealAndComplexPathsAgree) {
    const FracParams p(0.4, 0.9);
    for (double s : {1e-5, 0.3, 7.0, 1e5}) {
        EXPECT_EQ(eval_phi(p, s), eval_phi(p, Complex(s, 0.0)).real());
        EXPECT_EQ(eval_phi(p, Complex(s, 0.0)).imag(), 0.0);
    }
}

TEST(Symbol, BranchCutAndOriginRejected) {
    const FracParams p(0.5, 1.0);
    EXPECT_THROW(eval_phi(p, Complex(0.0, 0.0)), DomainError);
    EXPECT_THROW(eval_phi(p, Complex(-2.0, 0.0)), DomainError);
    EXPECT_THROW(eval_phi(p, 0.0), DomainError);
    EXPECT_THROW(eval_h(p, 0.0), DomainError);
    EXPECT_THROW(eval_h(p, -1.0), DomainError);
    EXPECT_NO_THROW(eval_phi(p, Complex(-2.0, 1e-12)));
}

TEST(Symbol, ConjugateSymmetry) {
    const FracParams p(0.35, 1.3);
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> arg(-3.0, 3.0), logr(-6.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        const Complex s = std::polar(std::pow(10.0, logr(gen)), arg(gen));
        const Complex a = eval_phi(p, s), b = eval_phi(p, std::conj(s));
        EXPECT_NEAR(std::abs(a - std::conj(b)) / std::abs(a), 0.0, 1e-13);
    }
}

TEST(Symbol, HExamples) {
    EXPECT_NEAR(eval_h(FracParams(0.5, 0.0), 1.0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(eval_h(FracParams(0.5, 0.0), 1e8), 1.0, 1e-3);
    EXPECT_NEAR(eval_h(FracParams(0.3, 0.0), 2.0), 0.69886059078279289245, 1e-15);
}

TEST(Symbol, PositivityOnLogGrid) {
    for (double a : {0.1, 0.5, 0.9}) {
        for (double b : {0.0, 0.5, 1.0, 3.0}) {
            const FracParams p(a, b);
            for (int i = 0; i <= 160; ++i) {
                const double s = std::pow(10.0, -8.0 + 0.1 * i);
                EXPECT_GT(eval_phi(p, s), 0.0) << p.describe() << " s=" << s;
            }
        }
    }
}

TEST(Symbol, HighFrequencyCaputoLimit) {
    for (double a : {0.3, 0.5, 0.7, 0.9}) {
        for (double b : {0.0, 0.5, 1.0}) {
            const FracParams p(a, b);
            for (double s : {1e6, 1e7, 1e9, 1e30}) {
                // |Phi / s^alpha - 1| is bounded by its first-order term beta (1-alpha) s^(alpha-1).
                const double gap = std::abs(eval_phi(p, s) / std::pow(s, a) - 1.0);
                EXPECT_LE(gap, b * (1.0 - a) * std::pow(s, a - 1.0) * (1.0 + 1e-9) + 1e-14);
                if (a <= 0.5 || s >= 1e30) EXPECT_LE(gap, 1e-3);
            }
        }
    }
}

TEST(Symbol, ApproachesIdentityAsAlphaToOne) {
    for (double b : {0.0, 0.5, 1.0}) {
        for (double s : {0.5, 1.0, 2.0, 10.0}) {
            double previous = INFINITY;
            for (double a : {0.9, 0.99, 0.999}) {
                const double gap = std::abs(eval_phi(FracParams(a, b), s) - s);
                if (gap > 0.0) EXPECT_LT(gap, previous) << "beta=" << b << " s=" << s << " alpha=" << a;
                EXPECT_LE(gap, previous);
                previous = gap;
            }
        }
    }
}

TEST(Symbol, UnitBetaOriginSlope) {
    // (1-alpha) Phi(s)/s = 1 / (1 + s^(1-alpha)/(1-alpha)) exactly when beta = 1.
    for (double a : {0.3, 0.5, 0.7, 0.9}) {
        for (double s : {1e-8, 1e-12, 1e-40}) {
            const double scaled = eval_phi(FracParams(a, 1.0), s) / s * (1.0 - a);
            EXPECT_NEAR(scaled, 1.0 / (1.0 + std::pow(s, 1.0 - a) / (1.0 - a)), 1e-13);
        }
    }
    for (double a : {0.3, 0.5}) EXPECT_NEAR(eval_phi(FracParams(a, 1.0), 1e-8) / 1e-8 * (1.0 - a), 1.0, 1e-3);
}

TEST(Symbol, HStrictlyIncreasing) {
    for (double a : {0.3, 0.6, 0.9}) {
        const FracParams p(a, 0.0);
        double previous = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double s = std::pow(10.0, -4.0 + 8.0 * i / 99.0);
            const double h = eval_h(p, s);
            EXPECT_GT(h, previous);
            EXPECT_LT(h, 1.0);
            previous = h;
        }
    }
}

TEST(Symbol, HDerivativeMatchesFiniteDifference) {
    for (double a : {0.3, 0.6, 0.9}) {
        const FracParams p(a, 0.0);
        for (double s : {0.1, 1.0, 10.0}) {
            const double step = s * 1e-5;
            const double fd = (eval_h(p, s + step) - eval_h(p, s - step)) / (2.0 * step);
            EXPECT_NEAR(symbol::h_derivative(p, s) / fd, 1.0, 1e-6);
            EXPECT_GT(symbol::h_derivative(p, s), 0.0);
        }
    }
}

TEST(Symbol, SectorialTwoRegimeBounds) {
    for (double a : {0.3, 0.5, 0.8}) {
        for (double b : {0.0, 0.5, 1.0}) {
            const FracParams p(a, b);
            for (double sign : {-1.0, 1.0}) {
                for (double r : {1e-4, 1e-2, 1e2, 1e4}) {
                    const Complex s = std::polar(r, sign * (std::numbers::pi - 0.3));
                    const double q = r < 1.0 ? a + b * (1.0 - a) : a;
                    const double ratio = std::abs(eval_phi(p, s)) / std::pow(r, q);
                    EXPECT_GE(ratio, 1e-2) << p.describe() << " r=" << r;
                    EXPECT_LE(ratio, 1e2) << p.describe() << " r=" << r;
                }
            }
        }
    }
}

TEST(Symbol, LowFrequencyExponentExamples) {
    EXPECT_NEAR(symbol::low_freq_exponent_estimate(FracParams(0.5, 0.0)), 0.5, 0.02);
    EXPECT_NEAR(symbol::low_freq_exponent_estimate(FracParams(0.5, 1.0)), 1.0, 0.02);
    EXPECT_NEAR(symbol::low_freq_exponent_estimate(FracParams(0.3, 0.5)), 0.65, 0.02);
}

TEST(Symbol, LowFrequencyWindow) {
    const auto w = symbol::low_freq_fit_window(FracParams(0.5, 1.0));
    EXPECT_LE(w.s_max, 1e-3);
    EXPECT_NEAR(w.s_max / w.s_min, 1e3, 1e-6);
    EXPECT_GE(w.points, 20);
    // alpha = 0.9 pulls the window toward the origin.
    EXPECT_LT(symbol::low_freq_fit_window(FracParams(0.9, 1.0)).s_max, 1e-6);
}

TEST(Symbol, ConvexityProbe) {
    EXPECT_GT(symbol::convexity_probe_at_origin(FracParams(0.5, 2.0), 1e-3), 0.0);
    EXPECT_LT(symbol::convexity_probe_at_origin(FracParams(0.5, 0.0), 1e-3), 0.0);
    EXPECT_GT(symbol::convexity_probe_at_origin(FracParams(0.3, 1.5), 1e-2), 0.0);
    EXPECT_THROW(symbol::convexity_probe_at_origin(FracParams(0.3, 1.5), 0.0), DomainError);
    EXPECT_THROW(symbol::convexity_probe_at_origin(FracParams(0.3, 1.5), 0.1), DomainError);
}

}  // namespace
}  // namespace wfrac
