#include "creasefold/curve.hpp"

#include "creasefold/errors.hpp"

#include <cmath>
#include <numbers>

namespace creasefold {

CircleCurve::CircleCurve(double radius) : r_(radius) {
    if (!(radius > 0.0))
        throw DomainError("circle radius must be positive");
}

double CircleCurve::end() const { return 2.0 * std::numbers::pi * r_; }

Vec3 CircleCurve::position(double s) const {
    const double u = s / r_;
    return {r_ * std::cos(u), r_ * std::sin(u), 0.0};
}

Vec3 CircleCurve::derivative(double s, int order) const {
    const double u = s / r_;
    if (order == 1)
        return {-std::sin(u), std::cos(u), 0.0};
    return {-std::cos(u) / r_, -std::sin(u) / r_, 0.0};
}

std::optional<Vec3> CircleCurve::third_derivative(double s) const {
    const double u = s / r_;
    return Vec3{std::sin(u) / (r_ * r_), -std::cos(u) / (r_ * r_), 0.0};
}

HelixCurve::HelixCurve(double radius, double rise, double length)
    : r_(radius), h_(rise), c_(std::hypot(radius, rise)), length_(length) {
    if (!(radius > 0.0) || !(length > 0.0))
        throw DomainError("helix needs positive radius and length");
}

HelixCurve HelixCurve::from_curvature_torsion(double kappa, double tau, double length) {
    // kappa = r/c², tau = h/c²  =>  c² = 1/(kappa² + tau²)
    const double c2 = 1.0 / (kappa * kappa + tau * tau);
    return HelixCurve(kappa * c2, tau * c2, length);
}

Vec3 HelixCurve::position(double s) const {
    const double u = s / c_;
    return {r_ * std::cos(u), r_ * std::sin(u), h_ * u};
}

Vec3 HelixCurve::derivative(double s, int order) const {
    const double u = s / c_;
    if (order == 1)
        return {-r_ * std::sin(u) / c_, r_ * std::cos(u) / c_, h_ / c_};
    const double c2 = c_ * c_;
    return {-r_ * std::cos(u) / c2, -r_ * std::sin(u) / c2, 0.0};
}

std::optional<Vec3> HelixCurve::third_derivative(double s) const {
    const double u = s / c_;
    const double c3 = c_ * c_ * c_;
    return Vec3{r_ * std::sin(u) / c3, -r_ * std::cos(u) / c3, 0.0};
}

LineCurve::LineCurve(Vec3 direction, double length) : dir_(direction.normalized()), length_(length) {}

} // namespace creasefold
