#pragma once

#include "creasefold/curve.hpp"
#include "creasefold/mesh.hpp"
#include "creasefold/pillow.hpp"
#include "creasefold/profile.hpp"
#include "creasefold/quadrature.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace creasefold {

/// A continuous function of t on [0, 1].
class ScheduleFunction {
public:
    ScheduleFunction() = default;

    static ScheduleFunction one_minus_t();
    static ScheduleFunction cosine();  // cos(pi t / 2)
    static ScheduleFunction constant(double c);
    static ScheduleFunction polynomial(std::vector<double> coefficients);
    /// Piecewise linear through (t_i, y_i); t must increase strictly.
    static ScheduleFunction table(std::vector<double> t, std::vector<double> values);
    static ScheduleFunction custom(std::string name, std::function<double(double)> f);

    double operator()(double t) const { return f_(t); }
    const std::string& name() const { return name_; }

private:
    ScheduleFunction(std::string name, std::function<double(double)> f) : name_(std::move(name)), f_(std::move(f)) {}

    std::string name_ = "zero";
    std::function<double(double)> f_ = [](double) { return 0.0; };
};

struct DeformationSchedule {
    ScheduleFunction lambda = ScheduleFunction::one_minus_t();
    ScheduleFunction mu = ScheduleFunction::constant(0.0);

    double psi(double t) const;
    /// lambda = 1 - t, mu = 0.
    static DeformationSchedule linear();
    /// lambda = cos(pi t / 2), mu = 0.
    static DeformationSchedule cosine();
};

/// Checks lambda(0) = 1, lambda(1) = mu(0) = mu(1) = 0 and
/// (1 + lambda(t)²) zeta'(s)² < 1 on an n_t x n_s grid (s interior).
ValidationReport validate_schedule(const DeformationSchedule& schedule, const FundamentalData& data, int n_t,
                                   int n_s, const Tolerances& tol = {});

/// c^t(s) = (∫₀ˢ sqrt(1 - (1 + lambda²) zeta'²) + mu, zeta, lambda zeta).
class DeformedCrease final : public SpaceCurve {
public:
    DeformedCrease(Profile zeta, double lambda, double mu, const Tolerances& tol);

    double begin() const override { return 0.0; }
    double end() const override { return zeta_->domain_end(); }
    Vec3 position(double s) const override;
    Vec3 derivative(double s, int order) const override;

    double sigma(double s) const;
    double lambda() const { return lambda_; }
    double mu() const { return mu_; }

private:
    Profile zeta_;
    double lambda_, mu_;
    Tolerances tol_;
    CumulativeIntegral x_;
};

/// Stage t of the quarter origami deformation X^t.
class DeformedQuarter {
public:
    DeformedQuarter(FundamentalData data, double t, double lambda, double mu, Tolerances tol = {});

    double t() const { return t_; }
    double lambda() const { return crease_->lambda(); }
    double mu() const { return crease_->mu(); }
    const FundamentalData& data() const { return data_; }
    const DeformedCrease& crease() const { return *crease_; }
    CurvePtr crease_ptr() const { return crease_; }

    /// xi^t = (0, lambda² - 1, -2 lambda) / (1 + lambda²).
    Vec3 upper_ruling() const;
    static Vec3 lower_ruling() { return {0.0, -1.0, 0.0}; }

    Vec3 upper_point(double s, double v) const { return crease_->position(s) + v * upper_ruling(); }
    Vec3 lower_point(double s, double v) const { return crease_->position(s) + v * lower_ruling(); }
    /// X^t(s, v); throws OutOfDomain outside U.
    Vec3 point(double s, double v) const;

    /// Phi^t(s) = X^t(s, zeta(s) - b).
    Vec3 vertical_end(double s) const;
    /// Psi^t(s) = X^t(s, zeta(s)).
    Vec3 horizontal_end(double s) const;

    QuarterDomainMap domain_map() const;

private:
    FundamentalData data_;
    double t_;
    Tolerances tol_;
    std::shared_ptr<const DeformedCrease> crease_;
    Vec3 xi_;
};

/// Throws ScheduleViolation when the hypotheses fail at this t.
DeformedQuarter deformed_quarter(const FundamentalData& data, const DeformationSchedule& schedule, double t,
                                 const Tolerances& tol = {}, int n_s = 401);

/// Sampled minimum over s of the third component of Psi for a given lambda.
double horizontal_end_depth(const FundamentalData& data, double lambda, int n_samples = 2001);

/// Assembles M^t from four reflected copies of X^t. Open seams are reported, not thrown.
AssemblyResult assemble_deformed(const FundamentalData& data, const DeformationSchedule& schedule, double t,
                                 int n_s, int n_v, const Tolerances& tol = {});

/// Pillow box built on the scaled crease pattern (x, (1 - t) psi(x)).
struct ScaledFamilyMember {
    double t = 0.0;
    TriMesh mesh;
    /// Fundamental data of the member; absent for the flat t = 1 member.
    std::optional<FundamentalData> data;
};

ScaledFamilyMember pattern_scaling_family(const FundamentalData& data, double t, int n_s, int n_v,
                                          const Tolerances& tol = {});

} // namespace creasefold
