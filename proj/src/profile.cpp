#include "creasefold/profile.hpp"

#include "creasefold/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace creasefold {

std::string to_string(ProfileKind kind) {
    switch (kind) {
    case ProfileKind::Hyperbolic: return "hyperbolic";
    case ProfileKind::CircularArc: return "circular";
    case ProfileKind::Polynomial: return "poly";
    case ProfileKind::TabulatedSpline: return "table";
    }
    return "unknown";
}

ProfileFunction::ProfileFunction(double length) : length_(length) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw DomainError("profile domain end must be a positive length, got " + std::to_string(length));
}

double ProfileFunction::eval(double s, int order) const {
    if (order < 0 || order > 2)
        throw DomainError("profile derivative order must be 0, 1 or 2");
    const double y = eval_unchecked(s, order);
    if (!std::isfinite(y))
        throw NonFiniteEvaluation("profile order " + std::to_string(order) + " at s = " + std::to_string(s));
    return y;
}

namespace {

class Hyperbolic final : public ProfileFunction {
public:
    Hyperbolic(double L, double r) : ProfileFunction(L), mid_(0.5 * L), r_(r), top_(std::hypot(0.5 * L, r)) {
        if (!(r > 0.0))
            throw DomainError("hyperbolic profile needs r > 0");
    }
    ProfileKind kind() const override { return ProfileKind::Hyperbolic; }

protected:
    double eval_unchecked(double s, int order) const override {
        const double u = s - mid_;
        const double q = std::hypot(u, r_);
        switch (order) {
        case 0: return top_ - q;
        case 1: return -u / q;
        default: return -r_ * r_ / (q * q * q);
        }
    }

private:
    double mid_, r_, top_;
};

class CircularArc final : public ProfileFunction {
public:
    CircularArc(double L, double R) : ProfileFunction(L), mid_(0.5 * L), R_(R) {
        if (!(R > 0.5 * L))
            throw DomainError("circular profile needs radius > L/2");
        base_ = std::sqrt(R * R - mid_ * mid_);
    }
    ProfileKind kind() const override { return ProfileKind::CircularArc; }

protected:
    double eval_unchecked(double s, int order) const override {
        const double u = s - mid_;
        const double w = std::sqrt(R_ * R_ - u * u);
        switch (order) {
        case 0: return w - base_;
        case 1: return -u / w;
        default: return -R_ * R_ / (w * w * w);
        }
    }

private:
    double mid_, R_, base_ = 0.0;
};

class Polynomial final : public ProfileFunction {
public:
    Polynomial(double L, std::vector<double> c) : ProfileFunction(L), c_(std::move(c)) {
        if (c_.empty())
            throw DomainError("polynomial profile needs at least one coefficient");
    }
    ProfileKind kind() const override { return ProfileKind::Polynomial; }

protected:
    double eval_unchecked(double s, int order) const override {
        double acc = 0.0;
        for (std::size_t k = c_.size(); k-- > static_cast<std::size_t>(order);) {
            double coef = c_[k];
            for (int j = 0; j < order; ++j)
                coef *= static_cast<double>(k - j);
            acc = acc * s + coef;
        }
        return acc;
    }

private:
    std::vector<double> c_;
};

class SplineTable final : public ProfileFunction {
public:
    explicit SplineTable(CubicSpline spline) : ProfileFunction(spline.back()), spline_(std::move(spline)) {}
    ProfileKind kind() const override { return ProfileKind::TabulatedSpline; }

protected:
    double eval_unchecked(double s, int order) const override { return spline_.eval(s, order); }

private:
    CubicSpline spline_;
};

class HermiteTable final : public ProfileFunction {
public:
    explicit HermiteTable(QuinticHermite table) : ProfileFunction(table.back()), table_(std::move(table)) {}
    ProfileKind kind() const override { return ProfileKind::TabulatedSpline; }

protected:
    double eval_unchecked(double s, int order) const override { return table_.eval(s, order); }

private:
    QuinticHermite table_;
};

class Scaled final : public ProfileFunction {
public:
    Scaled(Profile f, double k) : ProfileFunction(f->domain_end()), f_(std::move(f)), k_(k) {}
    ProfileKind kind() const override { return f_->kind(); }

protected:
    double eval_unchecked(double s, int order) const override { return k_ * f_->eval(s, order); }

private:
    Profile f_;
    double k_;
};

void require_zero_start(const std::vector<double>& s) {
    if (s.empty() || s.front() != 0.0)
        throw DomainError("tabulated profile must start at s = 0");
}

} // namespace

Profile make_hyperbolic(double length, double r) { return std::make_shared<Hyperbolic>(length, r); }

Profile make_circular_arc(double length, double radius) { return std::make_shared<CircularArc>(length, radius); }

Profile make_polynomial(double length, std::vector<double> coefficients) {
    return std::make_shared<Polynomial>(length, std::move(coefficients));
}

Profile make_spline_table(std::vector<double> s, std::vector<double> values) {
    require_zero_start(s);
    return std::make_shared<SplineTable>(CubicSpline(std::move(s), std::move(values)));
}

Profile make_hermite_table(std::vector<double> s, std::vector<double> values, std::vector<double> d1,
                           std::vector<double> d2) {
    require_zero_start(s);
    return std::make_shared<HermiteTable>(
        QuinticHermite(std::move(s), std::move(values), std::move(d1), std::move(d2)));
}

Profile make_scaled(Profile f, double k) { return std::make_shared<Scaled>(std::move(f), k); }

FundamentalData::FundamentalData(double b, Profile zeta, const QuadratureOptions& quad)
    : b_(b), zeta_(std::move(zeta)) {
    if (!zeta_)
        throw DomainError("fundamental data needs a profile");
    if (!(b > 0.0) || !std::isfinite(b))
        throw DomainError("half-height b must be positive");
    const auto& z = *zeta_;
    const auto integrand = [&z](double s) {
        const double d = z.d1(s);
        return std::sqrt(std::max(0.0, 1.0 - d * d));
    };
    half_width_ = 0.5 * adaptive_simpson(integrand, 0.0, z.domain_end(), quad);
}

FundamentalData example_data() { return FundamentalData(1.0, make_hyperbolic(2.0, 1.0)); }

bool ValidationReport::pass() const {
    return !conditions.empty()
        && std::all_of(conditions.begin(), conditions.end(), [](const ConditionMargin& c) { return c.pass; });
}

const ConditionMargin* ValidationReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name)
            return &c;
    for (const auto& c : endpoint_notes)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

struct Worst {
    std::string name;
    double margin = std::numeric_limits<double>::infinity();
    double at = 0.0;

    void update(double m, double s) {
        if (m < margin) {
            margin = m;
            at = s;
        }
    }
    ConditionMargin finish() const { return {name, margin, at, margin > 0.0}; }
};

} // namespace

ValidationReport validate_fundamental_data(double b, const ProfileFunction& zeta, int n_samples,
                                           const Tolerances& tol) {
    if (n_samples < 3)
        throw DomainError("validation needs at least 3 samples");
    if (!(b > 0.0))
        throw DomainError("half-height b must be positive");
    const double L = zeta.domain_end();

    ValidationReport report;
    const double z0 = zeta.value(0.0);
    const double zL = zeta.value(L);
    report.conditions.push_back({"zeta(0)=0", tol.boundary - std::abs(z0), 0.0, std::abs(z0) < tol.boundary});
    report.conditions.push_back({"zeta(L)=0", tol.boundary - std::abs(zL), L, std::abs(zL) < tol.boundary});

    Worst positive{"zeta>0"}, below{"zeta<b"}, concave{"zeta''<0"}, slope{"1-2zeta'^2>0"};
    for (int i = 1; i <= n_samples; ++i) {
        const double s = L * i / (n_samples + 1);
        const double z = zeta.value(s);
        const double dz = zeta.d1(s);
        const double ddz = zeta.d2(s);
        positive.update(z, s);
        below.update(b - z, s);
        concave.update(-ddz, s);
        slope.update(1.0 - 2.0 * dz * dz, s);
    }
    for (const auto* w : {&positive, &below, &concave, &slope})
        report.conditions.push_back(w->finish());

    for (const double s : {0.0, L}) {
        const double dz = zeta.d1(s);
        const double m = 1.0 - 2.0 * dz * dz;
        report.endpoint_notes.push_back({s == 0.0 ? "1-2zeta'(0)^2" : "1-2zeta'(L)^2", m, s, m > 0.0});
    }
    return report;
}

namespace {

double metric_weight(CreaseMode mode) { return mode == CreaseMode::SpaceCrease ? 2.0 : 1.0; }

} // namespace

ArcLengthProfile graph_to_arclength_profile(const ProfileFunction& f, CreaseMode mode,
                                            const ConversionOptions& opt) {
    const double k = metric_weight(mode);
    const double d = f.domain_end();
    const std::size_t n = std::max<std::size_t>(opt.panels, 2);

    const auto speed = [&f, k](double x) {
        const double df = f.d1(x);
        return std::sqrt(1.0 + k * df * df);
    };

    std::vector<double> s(n + 1), values(n + 1), d1(n + 1), d2(n + 1);
    double acc = 0.0;
    double x_prev = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double x = (j == n) ? d : d * static_cast<double>(j) / static_cast<double>(n);
        if (j > 0) {
            const double piece = adaptive_simpson(speed, x_prev, x, opt.quad);
            if (!(piece > 0.0))
                throw NonMonotone("cumulative arc length stalls at x = " + std::to_string(x));
            acc += piece;
        }
        x_prev = x;
        const double w = speed(x);
        s[j] = acc;
        values[j] = f.value(x);
        d1[j] = f.d1(x) / w;
        d2[j] = f.d2(x) / (w * w * w * w);
    }
    ArcLengthProfile out;
    out.length = acc;
    out.zeta = make_hermite_table(std::move(s), std::move(values), std::move(d1), std::move(d2));
    return out;
}

Profile arclength_to_graph(const ProfileFunction& zeta, CreaseMode mode, const ConversionOptions& opt) {
    const double k = metric_weight(mode);
    const double L = zeta.domain_end();
    const std::size_t n = std::max<std::size_t>(opt.panels, 2);

    const auto speed = [&zeta, k](double s) {
        const double dz = zeta.d1(s);
        return std::sqrt(std::max(0.0, 1.0 - k * dz * dz));
    };

    std::vector<double> x(n + 1), values(n + 1), d1(n + 1), d2(n + 1);
    double acc = 0.0;
    double s_prev = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double s = (j == n) ? L : L * static_cast<double>(j) / static_cast<double>(n);
        if (j > 0) {
            const double piece = adaptive_simpson(speed, s_prev, s, opt.quad);
            if (!(piece > 0.0))
                throw NonMonotone("graph abscissa stalls at s = " + std::to_string(s));
            acc += piece;
        }
        s_prev = s;
        const double w = speed(s);
        if (!(w > 0.0))
            throw NonFiniteEvaluation("graph slope is unbounded at s = " + std::to_string(s));
        x[j] = acc;
        values[j] = zeta.value(s);
        d1[j] = zeta.d1(s) / w;
        d2[j] = zeta.d2(s) / (w * w * w * w);
    }
    return make_hermite_table(std::move(x), std::move(values), std::move(d1), std::move(d2));
}

} // namespace creasefold
