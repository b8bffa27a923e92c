#pragma once

#include "creasefold/folding_kernel.hpp"
#include "creasefold/mesh.hpp"
#include "creasefold/profile.hpp"
#include "creasefold/quadrature.hpp"

namespace creasefold {

/// The pillow-box crease c(s) = (∫₀ˢ sigma, zeta(s), zeta(s)), sigma = sqrt(1 - 2 zeta'²).
/// Lies in the plane y = z. Derivatives throw EndpointSingularity where sigma < sigma_min.
class PillowCrease final : public SpaceCurve {
public:
    PillowCrease(Profile zeta, const Tolerances& tol);

    double begin() const override { return 0.0; }
    double end() const override { return zeta_->domain_end(); }
    Vec3 position(double s) const override;
    Vec3 derivative(double s, int order) const override;

    double sigma(double s) const;
    /// x(L) = ∫₀ᴸ sigma, the extent d of the graph domain.
    double extent() const { return x_.total(); }

private:
    Profile zeta_;
    Tolerances tol_;
    CumulativeIntegral x_;
};

struct CreasePoint {
    Vec3 position;
    Vec3 tangent;
    Vec3 second;
};

CreasePoint crease_curve(const FundamentalData& data, double s, const Tolerances& tol = {});

/// Origami parametrization X of the quarter domain P.
/// Upper strip p(s, v) = c(s) + v (0, 0, -1) on U+ = {0 <= v <= zeta(s)};
/// lower strip q(s, v) = c(s) + v (0, -1, 0) on U- = {zeta(s) - b <= v <= 0}.
class QuarterParametrization {
public:
    explicit QuarterParametrization(FundamentalData data, Tolerances tol = {});

    const FundamentalData& data() const { return data_; }
    const Tolerances& tolerances() const { return tol_; }
    const PillowCrease& crease() const { return *crease_; }
    CurvePtr crease_ptr() const { return crease_; }

    static Vec3 upper_ruling() { return {0.0, 0.0, -1.0}; }
    static Vec3 lower_ruling() { return {0.0, -1.0, 0.0}; }

    double v_min(double s) const { return data_.profile().value(s) - data_.b(); }
    double v_max(double s) const { return data_.profile().value(s); }

    /// X(s, v); throws OutOfDomain outside U.
    Vec3 point(double s, double v) const;
    Vec3 upper_point(double s, double v) const { return crease_->position(s) + v * upper_ruling(); }
    Vec3 lower_point(double s, double v) const { return crease_->position(s) + v * lower_ruling(); }

    /// alpha(s) = arctan(1 / sigma(s)) with its analytic derivative.
    AngleFunction alpha() const;
    /// Guarded sampling interval [eps L, (1 - eps) L].
    std::pair<double, double> guarded_range() const;
    /// Upper strip rebuilt by the general machinery from alpha, on the guarded interval.
    DevelopableStrip upper_strip() const;
    DevelopableStrip lower_strip() const;
    OrigamiMapRecord origami_map() const;

    QuarterDomainMap domain_map() const;

private:
    FundamentalData data_;
    Tolerances tol_;
    std::shared_ptr<const PillowCrease> crease_;
};

QuarterParametrization quarter_parametrization(const FundamentalData& data, const Tolerances& tol = {});

/// Welded, closed mesh of the full pillow box. Throws WeldFailure if any
/// boundary correspondence is farther apart than tol.weld * diagonal.
TriMesh assemble_box(const QuarterParametrization& quarter, int n_s, int n_v);

} // namespace creasefold
