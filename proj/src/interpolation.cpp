#include "creasefold/interpolation.hpp"

#include "creasefold/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace creasefold {

std::size_t locate_interval(const std::vector<double>& x, double t) {
    if (x.size() < 2)
        return 0;
    const auto it = std::upper_bound(x.begin(), x.end(), t);
    std::ptrdiff_t i = (it - x.begin()) - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(x.size()) - 2);
    return static_cast<std::size_t>(i);
}

namespace {

void require_increasing(const std::vector<double>& x, const char* who) {
    if (x.size() < 2)
        throw DomainError(std::string(who) + ": need at least two nodes");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            throw NonMonotone(std::string(who) + ": nodes must be strictly increasing");
}

} // namespace

QuinticHermite::QuinticHermite(std::vector<double> x, std::vector<double> f, std::vector<double> d1,
                               std::vector<double> d2)
    : x_(std::move(x)), f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)) {
    require_increasing(x_, "QuinticHermite");
    if (f_.size() != x_.size() || d1_.size() != x_.size() || d2_.size() != x_.size())
        throw DomainError("QuinticHermite: table columns differ in length");
}

double QuinticHermite::eval(double t, int order) const {
    t = std::clamp(t, x_.front(), x_.back());
    const std::size_t i = locate_interval(x_, t);
    const double h = x_[i + 1] - x_[i];
    const double u = (t - x_[i]) / h;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;

    // basis for (f0, h f0', h² f0'', f1, h f1', h² f1'')
    double w[6];
    switch (order) {
    case 0:
        w[0] = 1 - 10 * u3 + 15 * u4 - 6 * u5;
        w[1] = u - 6 * u3 + 8 * u4 - 3 * u5;
        w[2] = 0.5 * u2 - 1.5 * u3 + 1.5 * u4 - 0.5 * u5;
        w[3] = 10 * u3 - 15 * u4 + 6 * u5;
        w[4] = -4 * u3 + 7 * u4 - 3 * u5;
        w[5] = 0.5 * u3 - u4 + 0.5 * u5;
        break;
    case 1:
        w[0] = -30 * u2 + 60 * u3 - 30 * u4;
        w[1] = 1 - 18 * u2 + 32 * u3 - 15 * u4;
        w[2] = u - 4.5 * u2 + 6 * u3 - 2.5 * u4;
        w[3] = 30 * u2 - 60 * u3 + 30 * u4;
        w[4] = -12 * u2 + 28 * u3 - 15 * u4;
        w[5] = 1.5 * u2 - 4 * u3 + 2.5 * u4;
        break;
    case 2:
        w[0] = -60 * u + 180 * u2 - 120 * u3;
        w[1] = -36 * u + 96 * u2 - 60 * u3;
        w[2] = 1 - 9 * u + 18 * u2 - 10 * u3;
        w[3] = 60 * u - 180 * u2 + 120 * u3;
        w[4] = -24 * u + 84 * u2 - 60 * u3;
        w[5] = 3 * u - 12 * u2 + 10 * u3;
        break;
    default:
        throw DomainError("QuinticHermite: derivative order must be 0, 1 or 2");
    }
    const double p = w[0] * f_[i] + w[1] * h * d1_[i] + w[2] * h * h * d2_[i] + w[3] * f_[i + 1]
                   + w[4] * h * d1_[i + 1] + w[5] * h * h * d2_[i + 1];
    if (order == 0)
        return p;
    return order == 1 ? p / h : p / (h * h);
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> f) : x_(std::move(x)), f_(std::move(f)) {
    require_increasing(x_, "CubicSpline");
    if (f_.size() != x_.size())
        throw DomainError("CubicSpline: value count differs from node count");
    const std::size_t n = x_.size();
    m_.assign(n, 0.0);
    if (n < 3)
        return;
    // tridiagonal solve for natural end conditions
    std::vector<double> c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        const double a = h0 / 6.0, b = (h0 + h1) / 3.0, cc = h1 / 6.0;
        const double rhs = (f_[i + 1] - f_[i]) / h1 - (f_[i] - f_[i - 1]) / h0;
        const double denom = b - a * c[i - 1];
        c[i] = cc / denom;
        d[i] = (rhs - a * d[i - 1]) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = d[i] - c[i] * m_[i + 1];
        if (i == 1)
            break;
    }
}

double CubicSpline::eval(double t, int order) const {
    t = std::clamp(t, x_.front(), x_.back());
    const std::size_t i = locate_interval(x_, t);
    const double h = x_[i + 1] - x_[i];
    const double A = (x_[i + 1] - t) / h;
    const double B = (t - x_[i]) / h;
    switch (order) {
    case 0:
        return A * f_[i] + B * f_[i + 1] + ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
    case 1:
        return (f_[i + 1] - f_[i]) / h - (3 * A * A - 1) / 6.0 * h * m_[i] + (3 * B * B - 1) / 6.0 * h * m_[i + 1];
    case 2:
        return A * m_[i] + B * m_[i + 1];
    default:
        throw DomainError("CubicSpline: derivative order must be 0, 1 or 2");
    }
}

} // namespace creasefold
