#pragma once

#include "creasefold/geometry.hpp"

#include <memory>
#include <optional>

namespace creasefold {

/// Arc-length parametrized space curve on [begin(), end()].
class SpaceCurve {
public:
    virtual ~SpaceCurve() = default;

    virtual double begin() const = 0;
    virtual double end() const = 0;
    virtual Vec3 position(double s) const = 0;
    /// order 1 (unit tangent) or 2.
    virtual Vec3 derivative(double s, int order) const = 0;
    /// Curves that know their third derivative report it here; the Frenet
    /// frame then computes torsion analytically.
    virtual std::optional<Vec3> third_derivative(double /*s*/) const { return std::nullopt; }
};

using CurvePtr = std::shared_ptr<const SpaceCurve>;

/// Circle of the given radius in the plane z = 0, one full turn.
class CircleCurve final : public SpaceCurve {
public:
    explicit CircleCurve(double radius);
    double begin() const override { return 0.0; }
    double end() const override;
    Vec3 position(double s) const override;
    Vec3 derivative(double s, int order) const override;
    std::optional<Vec3> third_derivative(double s) const override;

private:
    double r_;
};

/// Circular helix (r cos(s/c), r sin(s/c), h s/c), c = sqrt(r² + h²),
/// with curvature r/c² and torsion h/c².
class HelixCurve final : public SpaceCurve {
public:
    HelixCurve(double radius, double rise, double length);
    /// Unit-speed helix with prescribed curvature and torsion.
    static HelixCurve from_curvature_torsion(double kappa, double tau, double length);

    double begin() const override { return 0.0; }
    double end() const override { return length_; }
    Vec3 position(double s) const override;
    Vec3 derivative(double s, int order) const override;
    std::optional<Vec3> third_derivative(double s) const override;

    double curvature() const { return r_ / (c_ * c_); }
    double torsion() const { return h_ / (c_ * c_); }

private:
    double r_, h_, c_, length_;
};

/// Straight segment from origin along a unit direction.
class LineCurve final : public SpaceCurve {
public:
    LineCurve(Vec3 direction, double length);
    double begin() const override { return 0.0; }
    double end() const override { return length_; }
    Vec3 position(double s) const override { return s * dir_; }
    Vec3 derivative(double /*s*/, int order) const override { return order == 1 ? dir_ : Vec3::Zero(); }
    std::optional<Vec3> third_derivative(double) const override { return Vec3::Zero(); }

private:
    Vec3 dir_;
    double length_;
};

} // namespace creasefold
