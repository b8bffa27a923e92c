#include "creasefold/quadrature.hpp"

#include "creasefold/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace creasefold {

namespace {

struct SimpsonState {
    const ScalarFn& f;
    const QuadratureOptions& opt;
    std::size_t panels = 0;
};

double checked(const ScalarFn& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y))
        throw QuadratureFailure("integrand is not finite at x = " + std::to_string(x));
    return y;
}

double refine(SimpsonState& st, double a, double b, double fa, double fm, double fb, double whole, double tol,
              int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = checked(st.f, lm);
    const double frm = checked(st.f, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    if (++st.panels > st.opt.max_panels)
        throw QuadratureFailure("panel budget exhausted on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    if (std::abs(delta) <= 15.0 * tol || depth >= st.opt.max_depth)
        return left + right + delta / 15.0;
    return refine(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
         + refine(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double adaptive_simpson(const ScalarFn& f, double a, double b, const QuadratureOptions& opt) {
    if (a == b)
        return 0.0;
    if (b < a)
        return -adaptive_simpson(f, b, a, opt);
    SimpsonState st{f, opt};
    const double fa = checked(f, a);
    const double fb = checked(f, b);
    const double m = 0.5 * (a + b);
    const double fm = checked(f, m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return refine(st, a, b, fa, fm, fb, whole, opt.abs_tol, 0);
}

CumulativeIntegral::CumulativeIntegral(ScalarFn f, double a, double b, std::size_t panels,
                                       const QuadratureOptions& opt)
    : f_(std::move(f)), a_(a), b_(b), opt_(opt) {
    panels = std::max<std::size_t>(panels, 1);
    nodes_.resize(panels + 1);
    values_.resize(panels + 1);
    const double h = (b - a) / static_cast<double>(panels);
    for (std::size_t i = 0; i <= panels; ++i)
        nodes_[i] = a + h * static_cast<double>(i);
    nodes_.back() = b;
    values_[0] = 0.0;
    for (std::size_t i = 0; i < panels; ++i)
        values_[i + 1] = values_[i] + adaptive_simpson(f_, nodes_[i], nodes_[i + 1], opt_);
}

double CumulativeIntegral::operator()(double x) const {
    if (nodes_.empty())
        return 0.0;
    if (x <= a_)
        return adaptive_simpson(f_, a_, x, opt_);
    if (x >= b_)
        return values_.back() + adaptive_simpson(f_, b_, x, opt_);
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    // integrate from whichever neighbouring node is closer
    if (i + 1 < nodes_.size() && nodes_[i + 1] - x < x - nodes_[i])
        return values_[i + 1] - adaptive_simpson(f_, x, nodes_[i + 1], opt_);
    return values_[i] + adaptive_simpson(f_, nodes_[i], x, opt_);
}

} // namespace creasefold
