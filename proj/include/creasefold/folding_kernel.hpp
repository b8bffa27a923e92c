#pragma once

#include "creasefold/curve.hpp"
#include "creasefold/geometry.hpp"
#include "creasefold/tolerances.hpp"

#include <functional>
#include <utility>

namespace creasefold {

struct FrenetData {
    Vec3 T, N, B;
    double kappa = 0.0;
    double tau = 0.0;
};

/// Frenet apparatus of an arc-length curve. Torsion is analytic when the curve
/// provides a third derivative, otherwise a five-point difference of N (h = 1e-4).
/// Throws VanishingCurvature when |T'| <= tol.kappa_min.
FrenetData frenet_frame(const SpaceCurve& curve, double s, const Tolerances& tol = {});

/// Second angular function from the developability condition
/// cot beta = (alpha' + tau) / (kappa sin alpha), with beta in (0, pi).
double beta_from_alpha(double alpha, double alpha_prime, double kappa, double tau);

/// Residual of the developability condition for a given beta.
double developability_residual(double alpha, double alpha_prime, double kappa, double tau, double beta);

/// First angular function along a crease. A missing derivative is replaced by
/// a central difference of value().
struct AngleFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;

    double operator()(double s) const { return value(s); }
    double prime(double s) const;
    AngleFunction negated() const;
    static AngleFunction constant(double alpha);
};

/// Ruling interval [delta(s), epsilon(s)] with delta <= 0 <= epsilon.
using VRange = std::function<std::pair<double, double>(double)>;

/// Developable surface c(s) + v xi(s) along a crease, determined by its first
/// angular function. The ruling direction is rebuilt from the Frenet frame:
/// xi = cos(beta) T + sin(beta) (cos(alpha) N + sin(alpha) B).
class DevelopableStrip {
public:
    DevelopableStrip(CurvePtr crease, AngleFunction alpha, double s_begin, double s_end, VRange v_range,
                     Tolerances tol = {});

    const SpaceCurve& crease() const { return *crease_; }
    const CurvePtr& crease_ptr() const { return crease_; }
    const AngleFunction& alpha_function() const { return alpha_; }
    const VRange& v_range_function() const { return v_range_; }
    const Tolerances& tolerances() const { return tol_; }
    double s_begin() const { return s0_; }
    double s_end() const { return s1_; }

    double alpha(double s) const { return alpha_(s); }
    FrenetData frame(double s) const { return frenet_frame(*crease_, s, tol_); }
    double beta(double s) const;
    /// Central difference of beta.
    double beta_prime(double s) const;
    Vec3 ruling(double s) const;
    Vec3 point(double s, double v) const;
    std::pair<double, double> v_range(double s) const { return v_range_(s); }
    bool contains(double s, double v) const;

private:
    CurvePtr crease_;
    AngleFunction alpha_;
    double s0_, s1_;
    VRange v_range_;
    Tolerances tol_;
};

struct StripGeometry {
    Vec3 point;
    Vec3 normal;     // nu = -sin(alpha) N + cos(alpha) B
    Vec3 conormal;   // n_g = cos(alpha) N + sin(alpha) B
    double geodesic_curvature = 0.0;  // kappa cos(alpha)
};

StripGeometry strip_geometry(const DevelopableStrip& strip, double s, double v);

struct MetricPair {
    Metric measured;     // central differences of the embedding, h = 1e-5 L
    Metric closed_form;  // E = (sin b - v(b' + kappa_g))² + cos² b, F = cos b, G = 1
};

MetricPair first_fundamental_form(const DevelopableStrip& strip, double s, double v);

/// Same crease, negated first angular function.
DevelopableStrip dual_strip(const DevelopableStrip& strip);

/// Pair of mutually dual strips glued along their common crease.
class OrigamiMapRecord {
public:
    /// lower is built as dual_strip(upper).
    explicit OrigamiMapRecord(DevelopableStrip upper);

    const DevelopableStrip& upper() const { return upper_; }
    const DevelopableStrip& lower() const { return lower_; }
    /// p(s, v) on v >= 0, q(s, v) on v <= 0.
    Vec3 point(double s, double v) const;

private:
    DevelopableStrip upper_;
    DevelopableStrip lower_;
};

} // namespace creasefold
