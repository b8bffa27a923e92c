#pragma once

#include "creasefold/curve.hpp"
#include "creasefold/mesh.hpp"
#include "creasefold/profile.hpp"
#include "creasefold/quadrature.hpp"

#include <span>

namespace creasefold {

/// Crease pattern gamma(s) = (∫₀ˢ sqrt(1 - zeta'²), zeta(s), 0) in the plane z = 0.
class CreasePatternCurve final : public SpaceCurve {
public:
    explicit CreasePatternCurve(Profile zeta);

    double begin() const override { return 0.0; }
    double end() const override { return zeta_->domain_end(); }
    Vec3 position(double s) const override;
    Vec3 derivative(double s, int order) const override;

    /// a = half the x-extent of the pattern.
    double half_width() const { return 0.5 * x_.total(); }
    /// |dy/dx| = |zeta'| / sqrt(1 - zeta'²).
    double slope(double s) const;

private:
    Profile zeta_;
    CumulativeIntegral x_;
};

/// Developing map Y(s, v) = gamma(s) + v (0, -1, 0) of the quarter domain onto
/// the rectangle [0, 2a] x [0, b].
class DevelopingMap {
public:
    explicit DevelopingMap(FundamentalData data);

    const FundamentalData& data() const { return data_; }
    const CreasePatternCurve& crease_pattern() const { return *gamma_; }
    CurvePtr crease_pattern_ptr() const { return gamma_; }
    double half_width() const { return gamma_->half_width(); }

    Vec3 point(double s, double v) const { return gamma_->position(s) + v * Vec3(0.0, -1.0, 0.0); }
    QuarterDomainMap domain_map() const;

private:
    FundamentalData data_;
    std::shared_ptr<const CreasePatternCurve> gamma_;
};

DevelopingMap developing_map(const FundamentalData& data);

/// Graph form psi(x), 0 <= x <= 2a, of the crease pattern.
Profile crease_pattern_graph(const FundamentalData& data);

struct ConditionReport {
    std::vector<ConditionMargin> conditions;  // "I", "II", "III", "IV"
    bool pass() const;
    const ConditionMargin* find(const std::string& name) const;
};

/// Conditions on a crease-pattern graph psi over [0, 2a] in a rectangle of height 2b:
/// (I) endpoints at A = (0,0), B = (2a,0); (II) |psi'| < 1; (III) psi'' of one sign and
/// nonvanishing; (IV) 0 < psi < b, so the pattern and its mirror across y = b stay apart.
ConditionReport validate_pattern_conditions(const ProfileFunction& psi, double b, int n_samples = 199,
                                            const Tolerances& tol = {});

/// Same, for a sampled polyline. Throws NonGraph unless x is strictly increasing.
ConditionReport validate_pattern_conditions(std::span<const Vec2> polyline, double b, const Tolerances& tol = {});

/// Two coplanar copies of [0, 2a] x [0, 2b] (sheet R' with reversed winding)
/// sharing their 4n perimeter vertices.
TriMesh double_rectangle_mesh(double a, double b, int n);
TriMesh double_rectangle_mesh(const FundamentalData& data, int n);

} // namespace creasefold
