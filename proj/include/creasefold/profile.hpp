#pragma once

#include "creasefold/interpolation.hpp"
#include "creasefold/quadrature.hpp"
#include "creasefold/tolerances.hpp"

#include <memory>
#include <string>
#include <vector>

namespace creasefold {

enum class ProfileKind { Hyperbolic, CircularArc, Polynomial, TabulatedSpline };

std::string to_string(ProfileKind kind);

/// A twice differentiable scalar function on [0, L].
///
/// Used both for arc-length height profiles zeta(s) and for graph functions
/// f(x), psi(x) over [0, d]. Evaluation is pure; instances are immutable.
class ProfileFunction {
public:
    virtual ~ProfileFunction() = default;

    virtual ProfileKind kind() const = 0;
    double domain_end() const { return length_; }

    /// order 0, 1 or 2. Throws NonFiniteEvaluation on NaN/inf results.
    double eval(double s, int order = 0) const;

    double value(double s) const { return eval(s, 0); }
    double d1(double s) const { return eval(s, 1); }
    double d2(double s) const { return eval(s, 2); }

protected:
    explicit ProfileFunction(double length);
    virtual double eval_unchecked(double s, int order) const = 0;

private:
    double length_;
};

using Profile = std::shared_ptr<const ProfileFunction>;

/// zeta(s) = sqrt(L²/4 + r²) - sqrt((s - L/2)² + r²).
/// With L = 2, r = 1 this is sqrt(2) - sqrt((s-1)² + 1).
Profile make_hyperbolic(double length, double r);

/// Circular arc of radius R through (0,0) and (L,0), bulging upward.
Profile make_circular_arc(double length, double radius);

/// Power series sum c_k s^k on [0, L].
Profile make_polynomial(double length, std::vector<double> coefficients);

/// Natural cubic spline through (s_i, values_i); s must start at 0 and increase.
Profile make_spline_table(std::vector<double> s, std::vector<double> values);

/// Quintic Hermite table with prescribed first and second derivatives.
Profile make_hermite_table(std::vector<double> s, std::vector<double> values,
                           std::vector<double> d1, std::vector<double> d2);

/// k * f, same kind and domain as f.
Profile make_scaled(Profile f, double k);

/// Fundamental data (b, zeta): half-height b and arc-length height profile.
class FundamentalData {
public:
    FundamentalData(double b, Profile zeta, const QuadratureOptions& quad = {});

    double b() const { return b_; }
    const Profile& zeta() const { return zeta_; }
    const ProfileFunction& profile() const { return *zeta_; }
    double L() const { return zeta_->domain_end(); }
    /// a = ½ ∫₀ᴸ sqrt(1 - zeta'(s)²) ds.
    double half_width() const { return half_width_; }

private:
    double b_;
    Profile zeta_;
    double half_width_;
};

/// b = 1, zeta(s) = sqrt(2) - sqrt((s-1)² + 1) on [0, 2].
FundamentalData example_data();

struct ConditionMargin {
    std::string name;
    double margin = 0.0;  // worst case; positive means satisfied
    double at = 0.0;      // location of the worst case
    bool pass = false;
};

struct ValidationReport {
    std::vector<ConditionMargin> conditions;
    /// Informational margins at s ∈ {0, L}; never affect pass().
    std::vector<ConditionMargin> endpoint_notes;

    bool pass() const;
    const ConditionMargin* find(const std::string& name) const;
};

/// Checks the fundamental-data conditions on the open grid s_i = L i / (n + 1), i = 1..n.
ValidationReport validate_fundamental_data(double b, const ProfileFunction& zeta, int n_samples,
                                           const Tolerances& tol = {});

/// Metric under which a graph (x, f(x)) is measured.
/// SpaceCrease: the crease (x, f, f), ds = sqrt(1 + 2 f'²) dx.
/// PlaneCrease: the plane curve (x, f), ds = sqrt(1 + f'²) dx.
enum class CreaseMode { SpaceCrease, PlaneCrease };

struct ArcLengthProfile {
    double length = 0.0;
    Profile zeta;
};

struct ConversionOptions {
    std::size_t panels = 1024;
    QuadratureOptions quad{1e-13};
};

/// Reparametrizes a graph f on [0, d] by the arc length of its crease (mode).
/// zeta(s(x)) = f(x); derivatives are carried exactly through the chain rule.
ArcLengthProfile graph_to_arclength_profile(const ProfileFunction& f, CreaseMode mode,
                                            const ConversionOptions& opt = {});

/// Inverse of graph_to_arclength_profile: returns the graph f(x) with f(x(s)) = zeta(s).
Profile arclength_to_graph(const ProfileFunction& zeta, CreaseMode mode, const ConversionOptions& opt = {});

} // namespace creasefold
