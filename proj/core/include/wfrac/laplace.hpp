#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wfrac/params.hpp"
#include "wfrac/time_grid.hpp"

/// Numerical inverse Laplace transform on the fixed Talbot contour.
namespace wfrac::laplace {

struct TalbotConfig {
    int n_nodes = 24;    ///< N >= 8, even
    double shift = 0.0;  ///< c >= 0; inverts F(s + c) and multiplies by e^(c t)

    /// Throws DomainError when an invariant is violated.
    void validate() const;
    std::string describe() const;
};

/// F(s). Must be analytic to the right of the contour and safe to call concurrently.
using TransformFn = std::function<Complex(Complex)>;

/// One quadrature node: f(t) ~ Re sum_k weight_k F(s_k).
struct ContourNode {
    Complex s;
    Complex weight;
};

/// Nodes for time t: r = 2N/(5t), theta_k = k pi / N, s(theta) = r theta (cot theta + i),
/// s(0) = r. The shift is folded into both nodes and weights.
std::vector<ContourNode> talbot_contour(const TalbotConfig& cfg, double t);

double invert(const TalbotConfig& cfg, const TransformFn& F, double t);

/// invert at every grid point, evaluated concurrently; output follows grid order.
std::vector<double> invert_batch(const TalbotConfig& cfg, const TransformFn& F, const TimeGrid& grid);

}  // namespace wfrac::laplace
