#include "wfrac/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "wfrac/errors.hpp"
#include "wfrac/parallel.hpp"
#include "wfrac/symbol.hpp"

namespace wfrac::kernels {
namespace {

void require_positive_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("kernel evaluated at t = " + std::to_string(t) + "; needs t > 0");
    }
}

// Nodes 0 = x_0 < x_1 < ... < x_n.
std::vector<double> with_origin(const TimeGrid& grid) {
    std::vector<double> x;
    x.reserve(grid.size() + 1);
    x.push_back(0.0);
    x.insert(x.end(), grid.points().begin(), grid.points().end());
    return x;
}

// Second-order three-point derivative estimates at every node.
std::vector<double> node_derivatives(const std::vector<double>& x, const std::vector<double>& v) {
    const std::size_t n = x.size() - 1;
    std::vector<double> d(n + 1);
    {
        double h1 = x[1] - x[0], h2 = x[2] - x[1];
        d[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * v[0] + (h1 + h2) / (h1 * h2) * v[1] -
               h1 / (h2 * (h1 + h2)) * v[2];
    }
    for (std::size_t i = 1; i < n; ++i) {
        double h1 = x[i] - x[i - 1], h2 = x[i + 1] - x[i];
        d[i] = -h2 / (h1 * (h1 + h2)) * v[i - 1] + (h2 - h1) / (h1 * h2) * v[i] +
               h1 / (h2 * (h1 + h2)) * v[i + 1];
    }
    {
        double h1 = x[n - 1] - x[n - 2], h2 = x[n] - x[n - 1];
        d[n] = h2 / (h1 * (h1 + h2)) * v[n - 2] - (h1 + h2) / (h1 * h2) * v[n - 1] +
               (2.0 * h2 + h1) / (h2 * (h1 + h2)) * v[n];
    }
    return d;
}

// out_j = int_0^{x_j} g(s) m(x_j - s) ds with g linear on each cell, g(x_i) = nodal[i].
// m0 and m1 are the first and second antiderivatives of the kernel m.
std::vector<double> product_integrate(const PrabhakarKernel& m0, const PrabhakarKernel& m1,
                                      const std::vector<double>& x, const std::vector<double>& nodal) {
    const std::size_t n = x.size() - 1;
    std::vector<double> out(n);
    parallel_for(n, [&](std::size_t jm1) {
        const std::size_t j = jm1 + 1;
        // a0[i] = M0(x_j - x_i), a1[i] = M1(x_j - x_i); both vanish at i = j.
        std::vector<double> a0(j + 1, 0.0), a1(j + 1, 0.0);
        for (std::size_t i = 0; i < j; ++i) {
            double tau = x[j] - x[i];
            a0[i] = m0(tau);
            a1[i] = m1(tau);
        }
        double acc = 0.0;
        for (std::size_t i = 1; i <= j; ++i) {
            double h = x[i] - x[i - 1];
            double slope = (nodal[i] - nodal[i - 1]) / h;
            double mass = a0[i - 1] - a0[i];
            double first_moment = a1[i - 1] - a1[i] - h * a0[i];
            acc += nodal[i - 1] * mass + slope * first_moment;
        }
        out[jm1] = acc;
    });
    return out;
}

// Solves A c = b for a 3x3 system by Gaussian elimination with partial pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3> b) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        if (a[col][col] == 0.0) throw DomainError("singular fit near the origin");
        for (int r = col + 1; r < 3; ++r) {
            double f = a[r][col] / a[col][col];
            for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 3; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

// Coefficient c of t^alpha in the fit u(t) - u(0) ~ c t^alpha + d t + e t^2 through
// the first three samples. The fit is done in t / t_3 for conditioning.
double origin_power_coefficient(double alpha, const SampledFunction& u) {
    const double t3 = u.grid[2];
    std::array<std::array<double, 3>, 3> a{};
    std::array<double, 3> b{};
    for (int i = 0; i < 3; ++i) {
        double tau = u.grid[i] / t3;
        a[i] = {std::pow(tau, alpha), tau, tau * tau};
        b[i] = u.values[i] - u.value_at_zero;
    }
    return solve3(a, b)[0] / std::pow(t3, alpha);
}

void require_three_samples(const SampledFunction& f) {
    f.validate();
    if (f.grid.size() < 3) {
        throw DomainError("grid too coarse: product integration needs at least 3 samples, got " +
                          std::to_string(f.grid.size()));
    }
}

}  // namespace

PrabhakarKernel::PrabhakarKernel(const FracParams& p, double gamma, double mu, double scale,
                                 laplace::TalbotConfig talbot)
    : params_(p),
      gamma_(gamma),
      mu_(mu),
      scale_(scale),
      talbot_(talbot),
      series_(gamma, p.memory_scale(), mu) {
    talbot_.validate();
}

std::optional<double> PrabhakarKernel::series_value(double t) const {
    require_positive_time(t);
    const double rho = params_.memory_scale();
    const double z = -params_.memory_scale() * std::pow(t, rho);
    auto e = series_.try_evaluate(z);
    if (!e) return std::nullopt;
    return scale_ * std::pow(t, mu_ - 1.0) * *e;
}

double PrabhakarKernel::talbot_value(double t) const {
    require_positive_time(t);
    return laplace::invert(talbot_, [this](Complex s) { return transform(s); }, t);
}

double PrabhakarKernel::operator()(double t, KernelPath path) const {
    switch (path) {
        case KernelPath::talbot:
            return talbot_value(t);
        case KernelPath::series: {
            auto v = series_value(t);
            if (!v) {
                throw AccuracyError("series path for the kernel cannot certify t = " +
                                    std::to_string(t));
            }
            return *v;
        }
        case KernelPath::automatic:
            break;
    }
    if (auto v = series_value(t)) return *v;
    return talbot_value(t);
}

Complex PrabhakarKernel::transform(Complex s) const {
    Complex log_value = -mu_ * std::log(s);
    if (gamma_ != 0.0) log_value += gamma_ * symbol::log_h(params_, s);
    return scale_ * std::exp(log_value);
}

PrabhakarKernel PrabhakarKernel::antiderivative(int order) const {
    if (order < 0) throw DomainError("antiderivative order must be non-negative");
    return PrabhakarKernel(params_, gamma_, mu_ + order, scale_, talbot_);
}

PrabhakarKernel w_kernel(const FracParams& p, laplace::TalbotConfig talbot) {
    return PrabhakarKernel(p, p.beta(), 1.0 - p.alpha(), 1.0, talbot);
}

PrabhakarKernel k_kernel(const FracParams& p, laplace::TalbotConfig talbot) {
    return PrabhakarKernel(p, -p.beta(), p.alpha(), 1.0, talbot);
}

PrabhakarKernel power_response(const FracParams& p, laplace::TalbotConfig talbot) {
    return PrabhakarKernel(p, p.beta(), 1.0, special::gamma_fn(1.0 + p.alpha()), talbot);
}

double eval_w(const FracParams& p, double t, KernelPath path) { return w_kernel(p)(t, path); }

double eval_k(const FracParams& p, double t, KernelPath path) { return k_kernel(p)(t, path); }

double caputo_kernel(double alpha, double t) {
    require_positive_time(t);
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("Caputo kernel needs alpha in (0,1)");
    return std::pow(t, -alpha) / special::gamma_fn(1.0 - alpha);
}

OriginBound inverse_kernel_origin_bound(const FracParams& p) {
    const PrabhakarKernel k = k_kernel(p);
    const TimeGrid grid = TimeGrid::logarithmic(1e-8, 1.0, 200);
    OriginBound best{0.0, grid[0]};
    for (double t : grid.points()) {
        double c = std::abs(k(t)) * std::pow(t, 1.0 - p.alpha());
        if (c > best.constant) best = {c, t};
    }
    return best;
}

SampledFunction w_derivative(const FracParams& p, const SampledFunction& u) {
    require_three_samples(u);
    const std::vector<double> x = with_origin(u.grid);

    const double c = origin_power_coefficient(p.alpha(), u);
    std::vector<double> v(x.size());
    v[0] = u.value_at_zero;
    for (std::size_t i = 1; i < x.size(); ++i) v[i] = u.values[i - 1] - c * std::pow(x[i], p.alpha());

    const std::vector<double> dv = node_derivatives(x, v);
    const PrabhakarKernel w = w_kernel(p);
    std::vector<double> out = product_integrate(w.antiderivative(1), w.antiderivative(2), x, dv);

    if (c != 0.0) {
        const PrabhakarKernel response = power_response(p);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * response(u.grid[j]);
    }
    return SampledFunction{u.grid, std::move(out), 0.0};
}

SampledFunction w_integral(const FracParams& p, const SampledFunction& f) {
    require_three_samples(f);
    const std::vector<double> x = with_origin(f.grid);
    std::vector<double> nodal;
    nodal.reserve(x.size());
    nodal.push_back(f.value_at_zero);
    nodal.insert(nodal.end(), f.values.begin(), f.values.end());

    const PrabhakarKernel k = k_kernel(p);
    std::vector<double> out = product_integrate(k.antiderivative(1), k.antiderivative(2), x, nodal);
    return SampledFunction{f.grid, std::move(out), 0.0};
}

double ftc_roundtrip_residual(const FracParams& p, const SampledFunction& f) {
    const SampledFunction u = w_integral(p, f);
    const SampledFunction back = w_derivative(p, u);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < f.values.size(); ++i) {
        worst = std::max(worst, std::abs(back.values[i] - f.values[i]) / (1.0 + std::abs(f.values[i])));
    }
    return worst;
}

}  // namespace wfrac::kernels
