#pragma once

#include <array>
#include <vector>

namespace creasefold {

/// Value and first two derivatives of a scalar function at one point.
using Jet2 = std::array<double, 3>;

/// C² piecewise quintic Hermite interpolant through (x_i, f_i, f'_i, f''_i).
/// Nodes must be strictly increasing.
class QuinticHermite {
public:
    QuinticHermite() = default;
    QuinticHermite(std::vector<double> x, std::vector<double> f, std::vector<double> d1, std::vector<double> d2);

    /// order ∈ {0, 1, 2}; x is clamped to the node range.
    double eval(double x, int order) const;
    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    std::size_t size() const { return x_.size(); }

private:
    std::vector<double> x_, f_, d1_, d2_;
};

/// Natural cubic spline through (x_i, f_i).
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> f);

    double eval(double x, int order) const;
    double front() const { return x_.front(); }
    double back() const { return x_.back(); }

private:
    std::vector<double> x_, f_, m_;  // m_: second derivatives at nodes
};

/// Index i with x[i] <= t < x[i+1], clamped to [0, n-2].
std::size_t locate_interval(const std::vector<double>& x, double t);

} // namespace creasefold
