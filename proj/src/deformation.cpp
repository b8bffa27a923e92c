#include "creasefold/deformation.hpp"

#include "creasefold/development.hpp"
#include "creasefold/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace creasefold {

ScheduleFunction ScheduleFunction::one_minus_t() {
    return {"1-t", [](double t) { return 1.0 - t; }};
}

ScheduleFunction ScheduleFunction::cosine() {
    return {"cos", [](double t) { return std::cos(0.5 * std::numbers::pi * t); }};
}

ScheduleFunction ScheduleFunction::constant(double c) {
    return {c == 0.0 ? "zero" : "const", [c](double) { return c; }};
}

ScheduleFunction ScheduleFunction::polynomial(std::vector<double> coefficients) {
    return {"poly", [c = std::move(coefficients)](double t) {
                double acc = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it)
                    acc = acc * t + *it;
                return acc;
            }};
}

ScheduleFunction ScheduleFunction::table(std::vector<double> t, std::vector<double> values) {
    if (t.size() < 2 || t.size() != values.size())
        throw InvalidDescriptor("schedule table needs at least two (t, value) pairs of equal length");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            throw InvalidDescriptor("schedule table t values must increase strictly");
    return {"table", [t = std::move(t), y = std::move(values)](double x) {
                if (x <= t.front())
                    return y.front();
                if (x >= t.back())
                    return y.back();
                const auto k = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), x) - t.begin()) - 1;
                const double w = (x - t[k]) / (t[k + 1] - t[k]);
                return (1.0 - w) * y[k] + w * y[k + 1];
            }};
}

ScheduleFunction ScheduleFunction::custom(std::string name, std::function<double(double)> f) {
    return {std::move(name), std::move(f)};
}

double DeformationSchedule::psi(double t) const {
    const double l = lambda(t);
    return std::sqrt(1.0 + l * l);
}

DeformationSchedule DeformationSchedule::linear() { return {}; }

DeformationSchedule DeformationSchedule::cosine() {
    return {ScheduleFunction::cosine(), ScheduleFunction::constant(0.0)};
}

ValidationReport validate_schedule(const DeformationSchedule& schedule, const FundamentalData& data, int n_t,
                                   int n_s, const Tolerances& tol) {
    if (n_t < 3 || n_s < 3)
        throw DomainError("schedule validation needs n_t, n_s >= 3");
    ValidationReport report;
    const auto endpoint = [&](const char* name, double value, double target, double at) {
        const double gap = std::abs(value - target);
        report.conditions.push_back({name, tol.boundary - gap, at, gap < tol.boundary});
    };
    endpoint("lambda(0)=1", schedule.lambda(0.0), 1.0, 0.0);
    endpoint("lambda(1)=0", schedule.lambda(1.0), 0.0, 1.0);
    endpoint("mu(0)=0", schedule.mu(0.0), 0.0, 0.0);
    endpoint("mu(1)=0", schedule.mu(1.0), 0.0, 1.0);

    const double L = data.L();
    double worst = std::numeric_limits<double>::infinity(), worst_t = 0.0;
    for (int i = 0; i < n_t; ++i) {
        const double t = static_cast<double>(i) / (n_t - 1);
        const double l = schedule.lambda(t);
        const double m = schedule.mu(t);
        if (!std::isfinite(l) || !std::isfinite(m)) {
            worst = -std::numeric_limits<double>::infinity();
            worst_t = t;
            break;
        }
        for (int j = 1; j <= n_s; ++j) {
            const double s = L * j / (n_s + 1);
            const double d = data.profile().d1(s);
            const double margin = 1.0 - (1.0 + l * l) * d * d;
            if (margin < worst) {
                worst = margin;
                worst_t = t;
            }
        }
    }
    report.conditions.push_back({"(1+lambda^2)zeta'^2<1", worst, worst_t, worst > 0.0});
    return report;
}

DeformedCrease::DeformedCrease(Profile zeta, double lambda, double mu, const Tolerances& tol)
    : zeta_(std::move(zeta)), lambda_(lambda), mu_(mu), tol_(tol) {
    const double k = 1.0 + lambda * lambda;
    const auto z = zeta_;
    x_ = CumulativeIntegral(
        [z, k](double s) {
            const double d = z->d1(s);
            return std::sqrt(std::max(0.0, 1.0 - k * d * d));
        },
        0.0, z->domain_end(), 256, QuadratureOptions{1e-13});
}

double DeformedCrease::sigma(double s) const {
    const double d = zeta_->d1(s);
    return std::sqrt(std::max(0.0, 1.0 - (1.0 + lambda_ * lambda_) * d * d));
}

Vec3 DeformedCrease::position(double s) const {
    const double z = zeta_->value(s);
    return {x_(s) + mu_, z, lambda_ * z};
}

Vec3 DeformedCrease::derivative(double s, int order) const {
    const double sg = sigma(s);
    const double dz = zeta_->d1(s);
    if (order == 1)
        return {sg, dz, lambda_ * dz};
    if (sg < tol_.sigma_min)
        throw EndpointSingularity("sigma^t = " + std::to_string(sg) + " at s = " + std::to_string(s));
    const double k = 1.0 + lambda_ * lambda_;
    return zeta_->d2(s) * Vec3(-k * dz / sg, 1.0, lambda_);
}

DeformedQuarter::DeformedQuarter(FundamentalData data, double t, double lambda, double mu, Tolerances tol)
    : data_(std::move(data)), t_(t), tol_(tol),
      crease_(std::make_shared<DeformedCrease>(data_.zeta(), lambda, mu, tol_)) {
    const double l2 = lambda * lambda;
    xi_ = Vec3(0.0, l2 - 1.0, -2.0 * lambda) / (1.0 + l2);
}

Vec3 DeformedQuarter::upper_ruling() const { return xi_; }

Vec3 DeformedQuarter::point(double s, double v) const {
    const double z = data_.profile().value(s);
    const double slack = 1e-12 * std::max(1.0, data_.b());
    if (s < 0.0 || s > data_.L() || v < z - data_.b() - slack || v > z + slack)
        throw OutOfDomain("(s, v) = (" + std::to_string(s) + ", " + std::to_string(v) + ") is outside U");
    return v >= 0.0 ? upper_point(s, v) : lower_point(s, v);
}

Vec3 DeformedQuarter::vertical_end(double s) const {
    return lower_point(s, data_.profile().value(s) - data_.b());
}

Vec3 DeformedQuarter::horizontal_end(double s) const { return upper_point(s, data_.profile().value(s)); }

QuarterDomainMap DeformedQuarter::domain_map() const {
    QuarterDomainMap m;
    m.length = data_.L();
    m.b = data_.b();
    m.zeta = [z = data_.zeta()](double s) { return z->value(s); };
    m.point = [c = crease_, xi = xi_](double s, double v) -> Vec3 {
        return c->position(s) + v * (v >= 0.0 ? xi : lower_ruling());
    };
    m.pinned_ends = true;
    return m;
}

DeformedQuarter deformed_quarter(const FundamentalData& data, const DeformationSchedule& schedule, double t,
                                 const Tolerances& tol, int n_s) {
    if (!(t >= 0.0 && t <= 1.0))
        throw ScheduleViolation("t = " + std::to_string(t) + " is outside [0, 1]");
    const double l = schedule.lambda(t);
    const double m = schedule.mu(t);
    if (!std::isfinite(l) || !std::isfinite(m))
        throw ScheduleViolation("schedule is not finite at t = " + std::to_string(t));
    for (int j = 1; j <= n_s; ++j) {
        const double s = data.L() * j / (n_s + 1);
        const double d = data.profile().d1(s);
        if (!((1.0 + l * l) * d * d < 1.0))
            throw ScheduleViolation("(1 + lambda²) zeta'² >= 1 at t = " + std::to_string(t) +
                                    ", s = " + std::to_string(s));
    }
    const auto bad_end = [&](double value, double target) { return std::abs(value - target) >= tol.boundary; };
    if ((t == 0.0 && (bad_end(l, 1.0) || bad_end(m, 0.0))) || (t == 1.0 && (bad_end(l, 0.0) || bad_end(m, 0.0))))
        throw ScheduleViolation("schedule violates its endpoint values at t = " + std::to_string(t));
    return DeformedQuarter(data, t, l, m, tol);
}

double horizontal_end_depth(const FundamentalData& data, double lambda, int n_samples) {
    const DeformedQuarter q(data, 0.0, lambda, 0.0);
    double depth = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_samples; ++i) {
        const double s = data.L() * i / (n_samples - 1);
        depth = std::min(depth, q.horizontal_end(s).z());
    }
    return depth;
}

AssemblyResult assemble_deformed(const FundamentalData& data, const DeformationSchedule& schedule, double t,
                                 int n_s, int n_v, const Tolerances& tol) {
    const DeformedQuarter q = deformed_quarter(data, schedule, t, tol);
    return assemble_reflected(q.domain_map(), n_s, n_v, tol.weld);
}

ScaledFamilyMember pattern_scaling_family(const FundamentalData& data, double t, int n_s, int n_v,
                                          const Tolerances& tol) {
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("pattern scaling parameter must lie in [0, 1]");
    ScaledFamilyMember out;
    out.t = t;
    if (t == 0.0) {
        out.mesh = assemble_box(quarter_parametrization(data, tol), n_s, n_v);
        out.data = data;
        return out;
    }
    if (t == 1.0) {
        out.mesh = double_rectangle_mesh(data, std::max(n_s, n_v));
        return out;
    }
    const Profile psi = crease_pattern_graph(data);
    const ArcLengthProfile arc = graph_to_arclength_profile(*make_scaled(psi, 1.0 - t), CreaseMode::PlaneCrease);
    FundamentalData scaled(data.b(), arc.zeta);
    out.mesh = assemble_box(quarter_parametrization(scaled, tol), n_s, n_v);
    out.data = std::move(scaled);
    return out;
}

} // namespace creasefold
