#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace creasefold {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

/// First fundamental form coefficients E ds² + 2F ds dv + G dv².
struct Metric {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;

    double det() const { return E * G - F * F; }
    /// Largest componentwise deviation from another metric.
    double distance(const Metric& o) const;
};

inline Vec3 reflect_vertical(const Vec3& p, double b) { return {p.x(), 2.0 * b - p.y(), p.z()}; }
inline Vec3 reflect_horizontal(const Vec3& p) { return {p.x(), p.y(), -p.z()}; }

} // namespace creasefold
