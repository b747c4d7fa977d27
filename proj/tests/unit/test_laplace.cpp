#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wfrac/errors.hpp"
#include "wfrac/laplace.hpp"
#include "wfrac/special.hpp"

namespace wfrac::laplace {
namespace {

const TransformFn kStep = [](Complex s) { return 1.0 / s; };
const TransformFn kRamp = [](Complex s) { return 1.0 / (s * s); };

TEST(TalbotConfig, Validation) {
    EXPECT_NO_THROW(TalbotConfig{}.validate());
    EXPECT_THROW((TalbotConfig{6, 0.0}.validate()), DomainError);
    EXPECT_THROW((TalbotConfig{25, 0.0}.validate()), DomainError);
    EXPECT_THROW((TalbotConfig{24, -1.0}.validate()), DomainError);
    EXPECT_EQ(TalbotConfig{}.describe(), "fixed-talbot N=24 shift=0 r=2N/(5t)");
}

TEST(Talbot, ContourShape) {
    const TalbotConfig cfg;
    const auto nodes = talbot_contour(cfg, 2.0);
    ASSERT_EQ(nodes.size(), 24u);
    const double r = 2.0 * 24 / (5.0 * 2.0);
    EXPECT_EQ(nodes[0].s, Complex(r, 0.0));
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        const double theta = k * std::numbers::pi / 24;
        EXPECT_NEAR(nodes[k].s.imag(), r * theta, 1e-12);
        EXPECT_NEAR(nodes[k].s.real(), r * theta / std::tan(theta), 1e-12);
    }
    EXPECT_THROW(talbot_contour(cfg, 0.0), DomainError);
}

TEST(Talbot, InvertExamples) {
    const TalbotConfig cfg;
    EXPECT_NEAR(invert(cfg, kStep, 3.0), 1.0, 1e-8);
    EXPECT_NEAR(invert(cfg, [](Complex s) { return 1.0 / (s + 1.0); }, 1.0), std::exp(-1.0), 1e-8);
    EXPECT_NEAR(invert(cfg, [](Complex s) { return std::pow(s, -0.5); }, 1.0), 1.0 / std::sqrt(std::numbers::pi), 1e-7);
    EXPECT_THROW(invert(cfg, kStep, 0.0), DomainError);
    EXPECT_THROW(invert(cfg, kStep, -1.0), DomainError);
}

TEST(Talbot, BatchExamples) {
    const TalbotConfig cfg;
    for (double v : invert_batch(cfg, kStep, TimeGrid::from_points({0.1, 1.0, 10.0}))) EXPECT_NEAR(v, 1.0, 1e-8);
    const auto ramp = invert_batch(cfg, kRamp, TimeGrid::from_points({0.5, 2.0}));
    EXPECT_NEAR(ramp[0], 0.5, 1e-8);
    EXPECT_NEAR(ramp[1], 2.0, 1e-8);
    const auto sine = invert_batch(cfg, [](Complex s) { return 1.0 / (s * s + 1.0); },
                                   TimeGrid::from_points({std::numbers::pi / 2}));
    EXPECT_NEAR(sine[0], 1.0, 1e-6);
}

TEST(Talbot, BatchMatchesPointwise) {
    const TalbotConfig cfg;
    const TransformFn F = [](Complex s) { return std::pow(s, -0.3); };
    const auto grid = TimeGrid::logarithmic(0.05, 10.0, 37);
    const auto batch = invert_batch(cfg, F, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(batch[i], invert(cfg, F, grid[i]));
}

TEST(Talbot, PropagatesTransformErrors) {
    const TransformFn bad = [](Complex) -> Complex { throw DomainError("no"); };
    EXPECT_THROW(invert(TalbotConfig{}, bad, 1.0), DomainError);
    EXPECT_THROW(invert_batch(TalbotConfig{}, bad, TimeGrid::from_points({1.0, 2.0})), DomainError);
}

TEST(Talbot, ShiftedContourStillInverts) {
    const TalbotConfig shifted{24, 1.5};
    EXPECT_NEAR(invert(shifted, [](Complex s) { return 1.0 / (s - 1.0); }, 2.0), std::exp(2.0), 1e-8 * std::exp(2.0));
    EXPECT_NEAR(invert(shifted, kStep, 0.7), 1.0, 1e-8);
}

struct Pair {
    TransformFn F;
    double (*f)(double);
};

double power_truth(double t, double rho) { return std::pow(t, rho - 1.0) / std::tgamma(rho); }

std::vector<Pair> reference_pairs() {
    return {
        {kStep, [](double) { return 1.0; }},
        {kRamp, [](double t) { return t; }},
        {[](Complex s) { return 1.0 / (s + 1.0); }, [](double t) { return std::exp(-t); }},
        {[](Complex s) { return std::pow(s, -0.3); }, [](double t) { return power_truth(t, 0.3); }},
        {[](Complex s) { return std::pow(s, -0.7); }, [](double t) { return power_truth(t, 0.7); }},
        {[](Complex s) { return std::pow(s, -0.5) / (std::sqrt(s) + 2.0); },
         [](double t) { return special::mittag_leffler(0.5, -2.0 * std::sqrt(t)); }},
    };
}

TEST(Talbot, ReferencePairAccuracyFloor) {
    const TalbotConfig cfg;
    const auto grid = TimeGrid::logarithmic(0.05, 10.0, 30);
    for (const Pair& p : reference_pairs()) {
        for (double t : grid.points()) {
            EXPECT_LE(std::abs(invert(cfg, p.F, t) / p.f(t) - 1.0), 1e-6) << t;
        }
    }
}

TEST(Talbot, FastDecayHitsAbsoluteFloor) {
    // Node terms carry e^(rt) = e^(2N/5) whatever t is, so rounding leaves an absolute
    // error near 1e-12 that swamps e^(-5t) in relative terms once t is past ~2.
    const TalbotConfig cfg;
    const TransformFn F = [](Complex s) { return 1.0 / (s + 5.0); };
    const auto grid = TimeGrid::logarithmic(0.05, 10.0, 60);
    for (double t : grid.points()) {
        const double exact = std::exp(-5.0 * t);
        const double value = invert(cfg, F, t);
        EXPECT_LE(std::abs(value - exact), 5e-12) << t;
        if (t <= 2.0) EXPECT_LE(std::abs(value / exact - 1.0), 1e-8) << t;
    }
}

TEST(Talbot, RefinementDoesNotHurt) {
    const TalbotConfig n24, n32{32, 0.0};
    for (const Pair& p : reference_pairs()) {
        for (double t : {0.05, 0.5, 3.0, 10.0}) {
            const double e24 = std::abs(invert(n24, p.F, t) - p.f(t));
            const double e32 = std::abs(invert(n32, p.F, t) - p.f(t));
            // Rounding is amplified by about e^(2N/5), so the larger rule has the higher floor.
            EXPECT_LE(e32, std::max(10.0 * e24, 1e-9 * std::max(1.0, std::abs(p.f(t))))) << t;
        }
    }
}

TEST(Talbot, ScaleCovariance) {
    const TalbotConfig cfg;
    const TransformFn F = [](Complex s) { return 1.0 / (s * (std::pow(s, 0.6) + 1.0)); };
    for (double c : {0.5, 2.0}) {
        // L[f(t/c)](s) = c F(c s).
        const TransformFn G = [&](Complex s) { return c * F(c * s); };
        for (double t : {0.2, 1.0, 4.0}) EXPECT_NEAR(invert(cfg, G, t), invert(cfg, F, t / c), 1e-8);
    }
}

TEST(Talbot, DeterministicAcrossCalls) {
    const TalbotConfig cfg;
    const TransformFn F = [](Complex s) { return std::exp(-std::sqrt(s)); };
    EXPECT_EQ(invert(cfg, F, 1.3), invert(cfg, F, 1.3));
}

}  // namespace
}  // namespace wfrac::laplace
