#include "creasefold/folding_kernel.hpp"

#include "creasefold/errors.hpp"

#include <cmath>
#include <string>

namespace creasefold {

namespace {

constexpr double kTorsionStep = 1e-4;

Vec3 principal_normal(const SpaceCurve& c, double s, double kappa_min) {
    const Vec3 dT = c.derivative(s, 2);
    const double k = dT.norm();
    if (!(k > kappa_min))
        throw VanishingCurvature("|T'| = " + std::to_string(k) + " at s = " + std::to_string(s));
    return dT / k;
}

} // namespace

FrenetData frenet_frame(const SpaceCurve& curve, double s, const Tolerances& tol) {
    FrenetData f;
    f.T = curve.derivative(s, 1);
    const Vec3 dT = curve.derivative(s, 2);
    f.kappa = dT.norm();
    if (!std::isfinite(f.kappa))
        throw NonFiniteEvaluation("curvature at s = " + std::to_string(s));
    if (!(f.kappa > tol.kappa_min))
        throw VanishingCurvature("|T'| = " + std::to_string(f.kappa) + " at s = " + std::to_string(s));
    f.N = dT / f.kappa;
    f.B = f.T.cross(f.N);

    if (const auto d3 = curve.third_derivative(s)) {
        // N' = (T'' kappa - T' kappa') / kappa², kappa' = T'.T'' / kappa
        const double dkappa = dT.dot(*d3) / f.kappa;
        const Vec3 dN = (*d3 * f.kappa - dT * dkappa) / (f.kappa * f.kappa);
        f.tau = dN.dot(f.B);
    } else {
        const double h = kTorsionStep;
        if (s - 2 * h < curve.begin() || s + 2 * h > curve.end())
            throw OutOfDomain("torsion stencil leaves the curve at s = " + std::to_string(s));
        const Vec3 dN = (-principal_normal(curve, s + 2 * h, tol.kappa_min)
                         + 8.0 * principal_normal(curve, s + h, tol.kappa_min)
                         - 8.0 * principal_normal(curve, s - h, tol.kappa_min)
                         + principal_normal(curve, s - 2 * h, tol.kappa_min))
                      / (12.0 * h);
        f.tau = dN.dot(f.B);
    }
    return f;
}

double beta_from_alpha(double alpha, double alpha_prime, double kappa, double tau) {
    const double sa = std::sin(alpha);
    if (sa == 0.0)
        throw DegenerateAngle("sin(alpha) = 0");
    if (!(kappa > 0.0))
        throw VanishingCurvature("beta_from_alpha needs kappa > 0");
    // arccot into (0, pi)
    return std::atan2(1.0, (alpha_prime + tau) / (kappa * sa));
}

double developability_residual(double alpha, double alpha_prime, double kappa, double tau, double beta) {
    return std::cos(beta) * kappa * std::sin(alpha) - (alpha_prime + tau) * std::sin(beta);
}

double AngleFunction::prime(double s) const {
    if (derivative)
        return derivative(s);
    const double h = 1e-5;
    return (value(s + h) - value(s - h)) / (2.0 * h);
}

AngleFunction AngleFunction::negated() const {
    AngleFunction out;
    out.value = [f = value](double s) { return -f(s); };
    if (derivative)
        out.derivative = [g = derivative](double s) { return -g(s); };
    return out;
}

AngleFunction AngleFunction::constant(double alpha) {
    return {[alpha](double) { return alpha; }, [](double) { return 0.0; }};
}

DevelopableStrip::DevelopableStrip(CurvePtr crease, AngleFunction alpha, double s_begin, double s_end,
                                   VRange v_range, Tolerances tol)
    : crease_(std::move(crease)), alpha_(std::move(alpha)), s0_(s_begin), s1_(s_end), v_range_(std::move(v_range)),
      tol_(tol) {
    if (!crease_ || !alpha_.value || !v_range_)
        throw DomainError("developable strip needs a crease, an angle function and a ruling range");
    if (!(s_end > s_begin))
        throw DomainError("developable strip needs s_end > s_begin");
}

double DevelopableStrip::beta(double s) const {
    const FrenetData f = frame(s);
    return beta_from_alpha(alpha_(s), alpha_.prime(s), f.kappa, f.tau);
}

double DevelopableStrip::beta_prime(double s) const {
    const double h = 1e-5 * (s1_ - s0_);
    return (beta(s + h) - beta(s - h)) / (2.0 * h);
}

Vec3 DevelopableStrip::ruling(double s) const {
    const FrenetData f = frame(s);
    const double a = alpha_(s);
    const double b = beta_from_alpha(a, alpha_.prime(s), f.kappa, f.tau);
    return std::cos(b) * f.T + std::sin(b) * (std::cos(a) * f.N + std::sin(a) * f.B);
}

Vec3 DevelopableStrip::point(double s, double v) const { return crease_->position(s) + v * ruling(s); }

bool DevelopableStrip::contains(double s, double v) const {
    if (s < s0_ || s > s1_)
        return false;
    const auto [lo, hi] = v_range_(s);
    return v >= lo && v <= hi;
}

StripGeometry strip_geometry(const DevelopableStrip& strip, double s, double v) {
    if (!strip.contains(s, v))
        throw OutOfDomain("(s, v) = (" + std::to_string(s) + ", " + std::to_string(v) + ") is outside the strip");
    const FrenetData f = strip.frame(s);
    const double a = strip.alpha(s);
    StripGeometry g;
    g.point = strip.point(s, v);
    g.normal = -std::sin(a) * f.N + std::cos(a) * f.B;
    g.conormal = std::cos(a) * f.N + std::sin(a) * f.B;
    g.geodesic_curvature = f.kappa * std::cos(a);
    return g;
}

MetricPair first_fundamental_form(const DevelopableStrip& strip, double s, double v) {
    if (!strip.contains(s, v))
        throw OutOfDomain("(s, v) = (" + std::to_string(s) + ", " + std::to_string(v) + ") is outside the strip");
    const double h = 1e-5 * (strip.s_end() - strip.s_begin());
    const Vec3 Xs = (strip.point(s + h, v) - strip.point(s - h, v)) / (2.0 * h);
    const Vec3 Xv = (strip.point(s, v + h) - strip.point(s, v - h)) / (2.0 * h);

    MetricPair out;
    out.measured = {Xs.squaredNorm(), Xs.dot(Xv), Xv.squaredNorm()};

    const FrenetData f = strip.frame(s);
    const double beta = beta_from_alpha(strip.alpha(s), strip.alpha_function().prime(s), f.kappa, f.tau);
    const double kg = f.kappa * std::cos(strip.alpha(s));
    const double e = std::sin(beta) - v * (strip.beta_prime(s) + kg);
    out.closed_form = {e * e + std::cos(beta) * std::cos(beta), std::cos(beta), 1.0};
    return out;
}

DevelopableStrip dual_strip(const DevelopableStrip& strip) {
    return DevelopableStrip(strip.crease_ptr(), strip.alpha_function().negated(), strip.s_begin(), strip.s_end(),
                            strip.v_range_function(), strip.tolerances());
}

OrigamiMapRecord::OrigamiMapRecord(DevelopableStrip upper) : upper_(std::move(upper)), lower_(dual_strip(upper_)) {}

Vec3 OrigamiMapRecord::point(double s, double v) const { return v >= 0.0 ? upper_.point(s, v) : lower_.point(s, v); }

} // namespace creasefold
