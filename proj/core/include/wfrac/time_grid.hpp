#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wfrac {

enum class GridKind { custom, uniform, graded, logarithmic };

/// How a grid was generated; carried into output headers so runs can be reproduced.
struct GridSpec {
    GridKind kind = GridKind::custom;
    double t_min = 0.0;
    double t_max = 0.0;
    std::size_t count = 0;
    double exponent = 1.0;  ///< clustering exponent for graded grids

    std::string describe() const;
};

/// Strictly increasing, strictly positive sample times.
class TimeGrid {
public:
    /// Throws DomainError if the points are empty, non-positive, non-finite or not
    /// strictly increasing.
    static TimeGrid from_points(std::vector<double> points);

    /// n equispaced points from t_min to t_max inclusive (t_min > 0).
    static TimeGrid uniform(double t_min, double t_max, std::size_t n);

    /// Origin-anchored graded grid t_j = t_end (j/n)^exponent, j = 1..n.
    static TimeGrid graded(double t_end, std::size_t n, double exponent = 2.0);

    /// Graded grid clustered toward t_min: t_min + (t_max - t_min) (j/(n-1))^exponent.
    static TimeGrid graded_between(double t_min, double t_max, std::size_t n,
                                   double exponent = 2.0);

    static TimeGrid logarithmic(double t_min, double t_max, std::size_t n);

    std::span<const double> points() const& noexcept { return points_; }
    /// A span into a temporary grid would dangle.
    std::span<const double> points() const&& = delete;
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }
    const GridSpec& spec() const noexcept { return spec_; }

private:
    TimeGrid(std::vector<double> points, GridSpec spec);

    std::vector<double> points_;
    GridSpec spec_;
};

/// Samples of a function on a TimeGrid plus its value at t = 0, which the grid
/// itself never contains.
struct SampledFunction {
    TimeGrid grid;
    std::vector<double> values;
    double value_at_zero = 0.0;

    static SampledFunction sample(const TimeGrid& grid, const std::function<double(double)>& f,
                                  double value_at_zero);

    /// Throws DomainError on length mismatch or a non-finite value at zero.
    void validate() const;

    /// Piecewise-linear interpolant through (0, value_at_zero) and the samples;
    /// zero beyond the last sample.
    double interpolate(double t) const;
};

}  // namespace wfrac
