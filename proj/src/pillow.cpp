#include "creasefold/pillow.hpp"

#include "creasefold/errors.hpp"

#include <algorithm>
#include <cmath>

namespace creasefold {

namespace {

QuadratureOptions table_quadrature() { return QuadratureOptions{1e-13}; }

} // namespace

PillowCrease::PillowCrease(Profile zeta, const Tolerances& tol) : zeta_(std::move(zeta)), tol_(tol) {
    const auto z = zeta_;
    x_ = CumulativeIntegral(
        [z](double s) {
            const double d = z->d1(s);
            return std::sqrt(std::max(0.0, 1.0 - 2.0 * d * d));
        },
        0.0, z->domain_end(), 256, table_quadrature());
}

double PillowCrease::sigma(double s) const {
    const double d = zeta_->d1(s);
    return std::sqrt(std::max(0.0, 1.0 - 2.0 * d * d));
}

Vec3 PillowCrease::position(double s) const {
    const double z = zeta_->value(s);
    return {x_(s), z, z};
}

Vec3 PillowCrease::derivative(double s, int order) const {
    const double sg = sigma(s);
    if (sg < tol_.sigma_min)
        throw EndpointSingularity("sigma = " + std::to_string(sg) + " at s = " + std::to_string(s));
    const double dz = zeta_->d1(s);
    if (order == 1)
        return {sg, dz, dz};
    const double ddz = zeta_->d2(s);
    return ddz * Vec3(-2.0 * dz / sg, 1.0, 1.0);
}

CreasePoint crease_curve(const FundamentalData& data, double s, const Tolerances& tol) {
    const PillowCrease c(data.zeta(), tol);
    return {c.position(s), c.derivative(s, 1), c.derivative(s, 2)};
}

QuarterParametrization::QuarterParametrization(FundamentalData data, Tolerances tol)
    : data_(std::move(data)), tol_(tol), crease_(std::make_shared<PillowCrease>(data_.zeta(), tol_)) {}

Vec3 QuarterParametrization::point(double s, double v) const {
    const double L = data_.L();
    const double slack = 1e-12 * std::max(1.0, data_.b());
    if (s < 0.0 || s > L || v < v_min(s) - slack || v > v_max(s) + slack)
        throw OutOfDomain("(s, v) = (" + std::to_string(s) + ", " + std::to_string(v) + ") is outside U");
    return v >= 0.0 ? upper_point(s, v) : lower_point(s, v);
}

AngleFunction QuarterParametrization::alpha() const {
    const auto c = crease_;
    const auto z = data_.zeta();
    AngleFunction a;
    a.value = [c](double s) { return std::atan(1.0 / c->sigma(s)); };
    // alpha' = 2 zeta' zeta'' / (sigma (1 + sigma²))
    a.derivative = [c, z](double s) {
        const double sg = c->sigma(s);
        return 2.0 * z->d1(s) * z->d2(s) / (sg * (1.0 + sg * sg));
    };
    return a;
}

std::pair<double, double> QuarterParametrization::guarded_range() const {
    const double L = data_.L();
    return {tol_.endpoint_eps * L, (1.0 - tol_.endpoint_eps) * L};
}

DevelopableStrip QuarterParametrization::upper_strip() const {
    const auto [lo, hi] = guarded_range();
    const auto z = data_.zeta();
    const double b = data_.b();
    return DevelopableStrip(
        crease_, alpha(), lo, hi, [z, b](double s) { return std::pair{z->value(s) - b, z->value(s)}; }, tol_);
}

DevelopableStrip QuarterParametrization::lower_strip() const { return dual_strip(upper_strip()); }

OrigamiMapRecord QuarterParametrization::origami_map() const { return OrigamiMapRecord(upper_strip()); }

QuarterDomainMap QuarterParametrization::domain_map() const {
    QuarterDomainMap m;
    m.length = data_.L();
    m.b = data_.b();
    m.zeta = [z = data_.zeta()](double s) { return z->value(s); };
    m.point = [c = crease_](double s, double v) -> Vec3 {
        return c->position(s) + v * (v >= 0.0 ? upper_ruling() : lower_ruling());
    };
    m.pinned_ends = true;
    return m;
}

QuarterParametrization quarter_parametrization(const FundamentalData& data, const Tolerances& tol) {
    return QuarterParametrization(data, tol);
}

TriMesh assemble_box(const QuarterParametrization& quarter, int n_s, int n_v) {
    AssemblyResult r = assemble_reflected(quarter.domain_map(), n_s, n_v, quarter.tolerances().weld);
    if (!r.all_welded())
        throw WeldFailure(std::to_string(r.unwelded()) + " boundary correspondences exceed the weld tolerance");
    return std::move(r.mesh);
}

} // namespace creasefold
