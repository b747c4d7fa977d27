#include "wfrac/laplace.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "wfrac/errors.hpp"
#include "wfrac/parallel.hpp"

namespace wfrac::laplace {

void TalbotConfig::validate() const {
    if (n_nodes < 8 || n_nodes % 2 != 0) {
        throw DomainError("Talbot node count must be even and at least 8, got " +
                          std::to_string(n_nodes));
    }
    if (!(shift >= 0.0) || !std::isfinite(shift)) {
        throw DomainError("Talbot shift must be finite and non-negative");
    }
}

std::string TalbotConfig::describe() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "fixed-talbot N=%d shift=%.10g r=2N/(5t)", n_nodes, shift);
    return buf;
}

std::vector<ContourNode> talbot_contour(const TalbotConfig& cfg, double t) {
    cfg.validate();
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("Laplace inversion needs t > 0, got " + std::to_string(t));
    }
    const int n = cfg.n_nodes;
    const double r = 2.0 * n / (5.0 * t);
    const double scale = r / n * std::exp(cfg.shift * t);

    std::vector<ContourNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    nodes.push_back({Complex(r + cfg.shift, 0.0), Complex(0.5 * scale * std::exp(r * t), 0.0)});
    for (int k = 1; k < n; ++k) {
        const double theta = k * std::numbers::pi / n;
        const double cot = 1.0 / std::tan(theta);
        const Complex s(r * theta * cot, r * theta);
        const double sigma = theta + (theta * cot - 1.0) * cot;
        const Complex weight = scale * std::exp(s * t) * Complex(1.0, sigma);
        nodes.push_back({s + cfg.shift, weight});
    }
    return nodes;
}

double invert(const TalbotConfig& cfg, const TransformFn& F, double t) {
    double acc = 0.0;
    for (const ContourNode& node : talbot_contour(cfg, t)) {
        acc += (node.weight * F(node.s)).real();
    }
    return acc;
}

std::vector<double> invert_batch(const TalbotConfig& cfg, const TransformFn& F, const TimeGrid& grid) {
    cfg.validate();
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { out[i] = invert(cfg, F, grid[i]); });
    return out;
}

}  // namespace wfrac::laplace
