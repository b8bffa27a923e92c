#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace creasefold {

using ScalarFn = std::function<double(double)>;

struct QuadratureOptions {
    double abs_tol = 1e-10;
    std::size_t max_panels = std::size_t{1} << 20;
    int max_depth = 100;
};

/// Adaptive Simpson quadrature of f over [a, b] (a > b gives the negated integral).
/// Throws QuadratureFailure when the panel budget is exhausted or f is not finite.
double adaptive_simpson(const ScalarFn& f, double a, double b, const QuadratureOptions& opt = {});

/// Running integral F(x) = ∫_a^x f, tabulated on a uniform node grid.
/// Evaluation adds an adaptive Simpson piece from the nearest node below x,
/// so F is accurate to roughly the per-panel tolerance everywhere.
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;
    CumulativeIntegral(ScalarFn f, double a, double b, std::size_t panels, const QuadratureOptions& opt);

    double operator()(double x) const;
    double total() const { return values_.empty() ? 0.0 : values_.back(); }
    double lower() const { return a_; }
    double upper() const { return b_; }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }

private:
    ScalarFn f_;
    double a_ = 0.0, b_ = 0.0;
    QuadratureOptions opt_;
    std::vector<double> nodes_;
    std::vector<double> values_;
};

} // namespace creasefold
