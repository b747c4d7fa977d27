#include "wfrac/time_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "wfrac/errors.hpp"

namespace wfrac {

std::string GridSpec::describe() const {
    char buf[160];
    switch (kind) {
        case GridKind::uniform:
            std::snprintf(buf, sizeof buf, "uniform tmin=%.10g tmax=%.10g n=%zu", t_min, t_max, count);
            break;
        case GridKind::graded:
            std::snprintf(buf, sizeof buf, "graded tmin=%.10g tmax=%.10g n=%zu exponent=%.10g", t_min,
                          t_max, count, exponent);
            break;
        case GridKind::logarithmic:
            std::snprintf(buf, sizeof buf, "log tmin=%.10g tmax=%.10g n=%zu", t_min, t_max, count);
            break;
        case GridKind::custom:
            std::snprintf(buf, sizeof buf, "custom tmin=%.10g tmax=%.10g n=%zu", t_min, t_max, count);
            break;
    }
    return buf;
}

TimeGrid::TimeGrid(std::vector<double> points, GridSpec spec)
    : points_(std::move(points)), spec_(spec) {
    if (points_.empty()) throw DomainError("time grid must contain at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i]) || points_[i] <= 0.0) {
            throw DomainError("time grid points must be finite and > 0");
        }
        if (i > 0 && !(points_[i] > points_[i - 1])) {
            throw DomainError("time grid points must be strictly increasing");
        }
    }
    spec_.count = points_.size();
    spec_.t_min = points_.front();
    spec_.t_max = points_.back();
}

TimeGrid TimeGrid::from_points(std::vector<double> points) {
    return TimeGrid(std::move(points), GridSpec{});
}

TimeGrid TimeGrid::uniform(double t_min, double t_max, std::size_t n) {
    if (n == 0) throw DomainError("uniform grid needs n >= 1");
    if (n == 1) return TimeGrid({t_min}, GridSpec{GridKind::uniform});
    std::vector<double> pts(n);
    for (std::size_t j = 0; j < n; ++j) {
        pts[j] = t_min + (t_max - t_min) * static_cast<double>(j) / static_cast<double>(n - 1);
    }
    pts.back() = t_max;
    return TimeGrid(std::move(pts), GridSpec{GridKind::uniform});
}

TimeGrid TimeGrid::graded(double t_end, std::size_t n, double exponent) {
    if (n == 0) throw DomainError("graded grid needs n >= 1");
    if (!(exponent >= 1.0)) throw DomainError("graded grid exponent must be >= 1");
    std::vector<double> pts(n);
    for (std::size_t j = 1; j <= n; ++j) {
        pts[j - 1] = t_end * std::pow(static_cast<double>(j) / static_cast<double>(n), exponent);
    }
    pts.back() = t_end;
    GridSpec spec{GridKind::graded};
    spec.exponent = exponent;
    return TimeGrid(std::move(pts), spec);
}

TimeGrid TimeGrid::graded_between(double t_min, double t_max, std::size_t n, double exponent) {
    if (n < 2) throw DomainError("graded grid needs n >= 2");
    if (!(exponent >= 1.0)) throw DomainError("graded grid exponent must be >= 1");
    std::vector<double> pts(n);
    for (std::size_t j = 0; j < n; ++j) {
        double x = static_cast<double>(j) / static_cast<double>(n - 1);
        pts[j] = t_min + (t_max - t_min) * std::pow(x, exponent);
    }
    pts.back() = t_max;
    GridSpec spec{GridKind::graded};
    spec.exponent = exponent;
    return TimeGrid(std::move(pts), spec);
}

TimeGrid TimeGrid::logarithmic(double t_min, double t_max, std::size_t n) {
    if (n < 2) throw DomainError("log grid needs n >= 2");
    if (!(t_min > 0.0)) throw DomainError("log grid needs t_min > 0");
    std::vector<double> pts(n);
    double lo = std::log(t_min), hi = std::log(t_max);
    for (std::size_t j = 0; j < n; ++j) {
        pts[j] = std::exp(lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n - 1));
    }
    pts.front() = t_min;
    pts.back() = t_max;
    return TimeGrid(std::move(pts), GridSpec{GridKind::logarithmic});
}

SampledFunction SampledFunction::sample(const TimeGrid& grid, const std::function<double(double)>& f,
                                        double value_at_zero) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);
    return SampledFunction{grid, std::move(values), value_at_zero};
}

void SampledFunction::validate() const {
    if (values.size() != grid.size()) {
        throw DomainError("sampled function: " + std::to_string(values.size()) +
                          " values for " + std::to_string(grid.size()) + " grid points");
    }
    if (!std::isfinite(value_at_zero)) throw DomainError("sampled function: value at zero is not finite");
}

double SampledFunction::interpolate(double t) const {
    auto pts = grid.points();
    if (t <= 0.0) return value_at_zero;
    if (t > pts.back()) return 0.0;
    auto it = std::lower_bound(pts.begin(), pts.end(), t);
    std::size_t j = static_cast<std::size_t>(it - pts.begin());
    double t_hi = pts[j], v_hi = values[j];
    double t_lo = j == 0 ? 0.0 : pts[j - 1];
    double v_lo = j == 0 ? value_at_zero : values[j - 1];
    if (t == t_hi) return v_hi;
    return v_lo + (v_hi - v_lo) * (t - t_lo) / (t_hi - t_lo);
}

}  // namespace wfrac
