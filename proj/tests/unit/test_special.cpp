#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wfrac/errors.hpp"
#include "wfrac/special.hpp"

namespace wfrac::special {
namespace {

double rel(double a, double b) { return std::abs(a / b - 1.0); }

TEST(Gamma, KnownValues) {
    EXPECT_LE(rel(gamma_fn(0.5), std::sqrt(std::numbers::pi)), 1e-15);
    EXPECT_EQ(gamma_fn(1.0), 1.0);
    EXPECT_EQ(gamma_fn(5.0), 24.0);
    EXPECT_LE(rel(gamma_fn(1.3), 0.89747069630627718849), 1e-14);
}

TEST(Gamma, PolesAndOverflow) {
    for (double x : {0.0, -1.0, -2.0, -17.0}) EXPECT_THROW(gamma_fn(x), DomainError) << x;
    EXPECT_THROW(gamma_fn(172.0), DomainError);
    EXPECT_THROW(gamma_fn(NAN), DomainError);
    EXPECT_NO_THROW(gamma_fn(171.5));
    EXPECT_TRUE(std::isfinite(gamma_fn(-2.5)));
}

TEST(Gamma, Reflection) {
    for (double x : {0.1, 0.3, 0.7}) {
        EXPECT_LE(rel(gamma_fn(x) * gamma_fn(1.0 - x), std::numbers::pi / std::sin(std::numbers::pi * x)), 1e-12);
    }
}

TEST(Gamma, RecurrenceOnRandomArguments) {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u(1e-3, 169.0);
    for (int i = 0; i < 500; ++i) {
        const double x = u(gen);
        EXPECT_LE(rel(gamma_fn(x + 1.0), x * gamma_fn(x)), 1e-13) << x;
    }
}

TEST(Pochhammer, SmallCases) {
    EXPECT_EQ(pochhammer(0.5, 0), 1.0);
    EXPECT_EQ(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5);
    EXPECT_EQ(pochhammer(-2.0, 3), 0.0);
    EXPECT_EQ(pochhammer(-2.0, 2), 2.0);
    EXPECT_THROW(pochhammer(1.0, -1), DomainError);
}

TEST(Prabhakar, CoefficientTableFollowsPochhammerRecursion) {
    for (double g : {0.5, -0.75, 2.0, -3.0}) {
        const PrabhakarSeries series(g, 0.6, 0.4);
        const auto& c = series.coefficients();
        double factorial = 1.0;
        for (int n = 0; n < 10 && n < static_cast<int>(c.size()); ++n) {
            if (n > 0) factorial *= n;
            const double expected = pochhammer(g, n);
            const double rebuilt = c[n] * factorial * std::tgamma(0.6 * n + 0.4);
            EXPECT_NEAR(rebuilt, expected, 1e-13 * std::max(1.0, std::abs(expected))) << "gamma=" << g << " n=" << n;
        }
    }
}

TEST(Prabhakar, Examples) {
    for (double z : {-4.0, -0.3, 0.0, 2.5}) EXPECT_LE(rel(prabhakar({0.0, 0.7, 1.8, z}), 1.0 / std::tgamma(1.8)), 1e-15);
    EXPECT_LE(rel(prabhakar({1.0, 1.0, 1.0, 1.0}), std::numbers::e), 1e-14);
    EXPECT_LE(rel(prabhakar({0.5, 0.5, 0.5, -0.8}), 0.33147110091966639226), 1e-12);
}

TEST(Prabhakar, NegativeIntegerGammaIsPolynomial) {
    const double rho = 0.4, mu = 0.9;
    const PrabhakarSeries series(-3.0, rho, mu);
    EXPECT_TRUE(series.terminates());
    EXPECT_EQ(series.coefficients().size(), 4u);
    for (double z : {-5.0, -1.3, 0.7, 4.0}) {
        double direct = 0.0, fact = 1.0;
        for (int n = 0; n <= 3; ++n) {
            if (n > 0) fact *= n;
            direct += pochhammer(-3.0, n) * std::pow(z, n) / (fact * std::tgamma(rho * n + mu));
        }
        const SeriesSum s = series.sum(z);
        EXPECT_NEAR(s.value, direct, 1e-14 * std::max(1.0, std::abs(direct))) << z;
        EXPECT_LE(s.terms, 4);
    }
}

TEST(Prabhakar, ErrorsInsteadOfSilentDegradation) {
    EXPECT_THROW(prabhakar({1.0, 0.5, 1.0, -5.5}), AccuracyError);
    EXPECT_THROW(prabhakar({1.0, 0.0, 1.0, -1.0}), DomainError);
    EXPECT_THROW(prabhakar({1.0, 0.5, -1.0, -1.0}), DomainError);
    // Small rho at the edge of the radius: the series needs more terms than the cap.
    EXPECT_FALSE(PrabhakarSeries(1.0, 0.3, 1.0).try_evaluate(-5.0).has_value());
    EXPECT_THROW(prabhakar({1.0, 0.3, 1.0, -5.0}), ConvergenceError);
    // Moderate argument, heavy cancellation.
    EXPECT_FALSE(PrabhakarSeries(1.0, 0.5, 1.0).try_evaluate(-4.9).has_value());
}

TEST(Prabhakar, CancellationEstimateIsHonest) {
    // Where the estimate certifies a value, it must actually be that accurate.
    for (double alpha : {0.3, 0.5, 0.7, 0.9}) {
        const PrabhakarSeries series(1.0, alpha, 1.0);
        for (double x = -5.0; x <= 0.0; x += 0.25) {
            if (auto v = series.try_evaluate(x)) EXPECT_LE(std::abs(*v - mittag_leffler(alpha, x)), 1e-10 * std::abs(*v));
        }
    }
}

TEST(Prabhakar, MatchesMittagLeffler) {
    for (double alpha : {0.5, 0.7, 0.9, 1.0}) {
        for (double x = -3.0; x <= 0.0; x += 0.1) {
            EXPECT_NEAR(prabhakar({1.0, alpha, 1.0, x}), mittag_leffler(alpha, x), 1e-9) << alpha << " " << x;
        }
    }
    for (double x = -1.0; x <= 0.0; x += 0.1) {
        EXPECT_NEAR(prabhakar({1.0, 0.3, 1.0, x}), mittag_leffler(0.3, x), 1e-9) << x;
    }
}

TEST(MittagLeffler, Examples) {
    EXPECT_LE(rel(mittag_leffler(1.0, -2.0), std::exp(-2.0)), 1e-15);
    EXPECT_LE(rel(mittag_leffler(0.5, -1.0), 0.42758357615580700441), 1e-13);
    for (double a : {0.2, 0.6, 1.0}) EXPECT_EQ(mittag_leffler(a, 0.0), 1.0);
    EXPECT_THROW(mittag_leffler(0.5, 0.1), DomainError);
    EXPECT_THROW(mittag_leffler(0.0, -1.0), DomainError);
    EXPECT_THROW(mittag_leffler(1.2, -1.0), DomainError);
}

TEST(MittagLeffler, HalfOrderClosedForm) {
    for (double x = -25.0; x <= 0.0; x += 0.01) {
        EXPECT_LE(rel(mittag_leffler(0.5, x), std::exp(x * x) * std::erfc(-x)), 1e-12) << x;
    }
}

TEST(MittagLeffler, LargeArgumentReferenceValues) {
    struct Case {
        double alpha, x, value;
    };
    // 40-digit Laplace inversion.
    const Case cases[] = {
        {0.3, -10.0, 0.072649729072772085356}, {0.5, -20.0, 0.028174348741051319319},
        {0.7, -50.0, 0.0067936656703830928422}, {0.9, -20.0, 0.0057495078161091138828},
        {0.5, -50.0, 0.0112815362653237725},   {0.3, -50.0, 0.015228201501814695036},
    };
    for (const Case& c : cases) EXPECT_LE(rel(mittag_leffler(c.alpha, c.x), c.value), 1e-10) << c.alpha << " " << c.x;
}

TEST(MittagLeffler, ContinuousAcrossSeriesRadius) {
    for (double a : {0.3, 0.5, 0.8}) {
        const double left = mittag_leffler(a, -kSeriesRadius - 1e-9);
        const double right = mittag_leffler(a, -kSeriesRadius + 1e-9);
        EXPECT_LE(rel(left, right), 1e-9) << a;
    }
}

TEST(MittagLeffler, CompletelyMonotoneSamples) {
    // E_alpha(-x) is positive and decreasing on x >= 0.
    for (double a : {0.3, 0.6, 0.95}) {
        double previous = 1.0;
        for (double x = 0.5; x <= 50.0; x += 0.5) {
            const double v = mittag_leffler(a, -x);
            EXPECT_GT(v, 0.0);
            EXPECT_LT(v, previous);
            previous = v;
        }
    }
}

}  // namespace
}  // namespace wfrac::special
