#include "creasefold/errors.hpp"
#include "creasefold/interpolation.hpp"
#include "creasefold/profile.hpp"
#include "creasefold/quadrature.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace creasefold;

TEST_CASE("adaptive Simpson integrates smooth functions and rejects non-finite integrands") {
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(adaptive_simpson([](double x) { return x * x; }, 1.0, 0.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(adaptive_simpson([](double) { return std::nan(""); }, 0.0, 1.0), QuadratureFailure);
    QuadratureOptions tight{1e-15, 16, 100};
    CHECK_THROWS_AS(adaptive_simpson([](double x) { return std::sqrt(std::abs(x - 0.3)); }, 0.0, 1.0, tight),
                    QuadratureFailure);
}

TEST_CASE("cumulative integral matches the fixed-panel oracle at arbitrary points") {
    const auto f = [](double x) { return std::exp(-x * x); };
    const CumulativeIntegral F(f, 0.0, 2.0, 64, QuadratureOptions{1e-13});
    for (double x : {0.0, 0.013, 0.5, 1.234, 2.0})
        CHECK(F(x) == doctest::Approx(oracle::simpson(f, 0.0, x)).epsilon(1e-11));
    CHECK(F.total() == doctest::Approx(oracle::simpson(f, 0.0, 2.0)).epsilon(1e-12));
}

TEST_CASE("interpolants reproduce their data") {
    const std::vector<double> x{0.0, 0.5, 1.0, 2.0};
    const std::vector<double> y{0.0, 1.0, 0.5, -1.0};
    const CubicSpline sp(x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(sp.eval(x[i], 0) == doctest::Approx(y[i]).epsilon(1e-14));
    CHECK(sp.eval(0.0, 2) == doctest::Approx(0.0).scale(1.0));
    CHECK(sp.eval(2.0, 2) == doctest::Approx(0.0).scale(1.0));

    // quintic Hermite is exact on quintics
    const auto p = [](double t) { return 1 - 2 * t + t * t * t - 0.5 * std::pow(t, 5); };
    const auto dp = [](double t) { return -2 + 3 * t * t - 2.5 * std::pow(t, 4); };
    const auto ddp = [](double t) { return 6 * t - 10 * std::pow(t, 3); };
    const std::vector<double> nodes{0.0, 0.7, 1.5};
    std::vector<double> f, d1, d2;
    for (double t : nodes) {
        f.push_back(p(t));
        d1.push_back(dp(t));
        d2.push_back(ddp(t));
    }
    const QuinticHermite qh(nodes, f, d1, d2);
    for (double t : {0.1, 0.69, 0.9, 1.4}) {
        CHECK(qh.eval(t, 0) == doctest::Approx(p(t)).epsilon(1e-12));
        CHECK(qh.eval(t, 1) == doctest::Approx(dp(t)).epsilon(1e-11));
        CHECK(qh.eval(t, 2) == doctest::Approx(ddp(t)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(CubicSpline({0.0, 1.0, 1.0}, {0.0, 1.0, 2.0}), NonMonotone);
}

TEST_CASE("hyperbolic builtin is the closed-form height profile") {
    const Profile z = make_hyperbolic(2.0, 1.0);
    CHECK(z->kind() == ProfileKind::Hyperbolic);
    CHECK(to_string(z->kind()) == "hyperbolic");
    CHECK(z->domain_end() == 2.0);
    for (int i = 0; i <= 20; ++i) {
        const double s = 0.1 * i;
        CHECK(z->value(s) == doctest::Approx(oracle::zeta(s)).epsilon(1e-15));
        CHECK(z->d1(s) == doctest::Approx(oracle::dzeta(s)).epsilon(1e-14));
        CHECK(z->d2(s) == doctest::Approx(oracle::ddzeta(s)).epsilon(1e-14));
    }
}

TEST_CASE("builtin derivatives agree with centered differences at 100 interior points") {
    const std::vector<Profile> profiles{make_hyperbolic(2.0, 1.0), make_circular_arc(2.0, 1.5),
                                        make_polynomial(2.0, {0.0, 0.6, -0.3})};
    const double h = 1e-5;
    for (const auto& p : profiles) {
        const double L = p->domain_end();
        for (int i = 1; i <= 100; ++i) {
            const double s = L * i / 101.0;
            const double d1 = oracle::central_diff([&](double x) { return p->value(x); }, s, h);
            const double d2 = oracle::central_diff([&](double x) { return p->d1(x); }, s, h);
            CHECK(std::abs(d1 - p->d1(s)) < 1e-6 * std::max(1.0, std::abs(p->d1(s))));
            CHECK(std::abs(d2 - p->d2(s)) < 1e-6 * std::max(1.0, std::abs(p->d2(s))));
        }
    }
}

TEST_CASE("tabulated spline derivatives converge like centered differences") {
    std::vector<double> s, v;
    for (int i = 0; i <= 200; ++i) {
        s.push_back(0.01 * i);
        v.push_back(oracle::zeta(0.01 * i));
    }
    const Profile sp = make_spline_table(s, v);
    CHECK(sp->kind() == ProfileKind::TabulatedSpline);
    for (double x : {0.3, 0.77, 1.5}) {
        const auto f = [&](double y) { return sp->value(y); };
        const double e1 = std::abs(oracle::central_diff(f, x, 1e-2) - sp->d1(x));
        const double e2 = std::abs(oracle::central_diff(f, x, 5e-3) - sp->d1(x));
        CHECK(e1 < 1e-4);
        CHECK(e2 <= e1 * 0.3 + 1e-10);  // O(h²): halving h cuts the error by about 4
        CHECK(sp->d1(x) == doctest::Approx(oracle::dzeta(x)).epsilon(1e-5));
    }
    CHECK_THROWS_AS(make_spline_table({0.1, 1.0}, {0.0, 0.0}), DomainError);
}

TEST_CASE("profile evaluation guards") {
    CHECK_THROWS_AS(make_polynomial(0.0, {1.0}), DomainError);
    CHECK_THROWS_AS(make_polynomial(-1.0, {1.0}), DomainError);
    const Profile huge = make_polynomial(2.0, {0.0, 0.0, 1e308});
    CHECK_THROWS_AS(huge->value(2.0), NonFiniteEvaluation);
    CHECK_THROWS_AS(make_hyperbolic(2.0, 1.0)->eval(1.0, 3), DomainError);
    const Profile scaled = make_scaled(make_hyperbolic(2.0, 1.0), 0.5);
    CHECK(scaled->d2(0.4) == doctest::Approx(0.5 * oracle::ddzeta(0.4)));
}

TEST_CASE("validate_fundamental_data on the example passes with positive margins") {
    const ValidationReport r = validate_fundamental_data(1.0, *make_hyperbolic(2.0, 1.0), 99);
    CHECK(r.pass());
    for (const auto& c : r.conditions) {
        INFO(c.name);
        CHECK(c.pass);
        CHECK(c.margin > 0.0);
    }
    REQUIRE(r.find("1-2zeta'^2>0") != nullptr);
    // endpoint equality is flagged, not enforced
    REQUIRE(r.endpoint_notes.size() == 2);
    for (const auto& n : r.endpoint_notes)
        CHECK(std::abs(n.margin) < 1e-12);
}

TEST_CASE("zero profile fails positivity at every interior sample") {
    const ValidationReport r = validate_fundamental_data(1.0, *make_polynomial(2.0, {0.0}), 9);
    CHECK_FALSE(r.pass());
    const ConditionMargin* c = r.find("zeta>0");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    CHECK(c->margin <= 0.0);
}

TEST_CASE("a too-small half-height fails zeta<b with the closed-form margin") {
    const ValidationReport r = validate_fundamental_data(0.3, *make_hyperbolic(2.0, 1.0), 99);
    CHECK_FALSE(r.pass());
    const ConditionMargin* c = r.find("zeta<b");
    REQUIRE(c != nullptr);
    CHECK(c->margin == doctest::Approx(0.3 - (std::sqrt(2.0) - 1.0)).epsilon(1e-12));
    CHECK(c->margin == doctest::Approx(-0.1142).epsilon(1e-3));
    CHECK(c->at == doctest::Approx(1.0));
}

TEST_CASE("validation is monotone in b") {
    const Profile z = make_hyperbolic(2.0, 1.0);
    bool passed = false;
    for (double b = 0.1; b < 3.0; b += 0.05) {
        const bool now = validate_fundamental_data(b, *z, 49).pass();
        CHECK((now || !passed));
        passed = passed || now;
    }
    CHECK(passed);
    CHECK_THROWS_AS(validate_fundamental_data(1.0, *z, 2), DomainError);
    CHECK_THROWS_AS(validate_fundamental_data(0.0, *z, 9), DomainError);
}

TEST_CASE("flat graph has arc length equal to its domain") {
    const ArcLengthProfile a = graph_to_arclength_profile(*make_polynomial(2.0, {0.0}), CreaseMode::PlaneCrease);
    CHECK(a.length == doctest::Approx(2.0).epsilon(1e-14));
    for (double s : {0.0, 0.5, 1.7, 2.0})
        CHECK(std::abs(a.zeta->value(s)) < 1e-15);
}

TEST_CASE("space-crease arc length matches the fixed-panel oracle and inverts back") {
    const Profile f = make_polynomial(2.0, {0.0, 0.6, -0.3});
    const auto df = [](double x) { return 0.6 - 0.6 * x; };
    const ArcLengthProfile a = graph_to_arclength_profile(*f, CreaseMode::SpaceCrease);
    const double L = oracle::simpson([&](double x) { return std::sqrt(1.0 + 2.0 * df(x) * df(x)); }, 0.0, 2.0);
    CHECK(a.length == doctest::Approx(L).epsilon(1e-10));
    CHECK(a.zeta->domain_end() == doctest::Approx(L).epsilon(1e-12));

    // re-integrating x(s) = ∫ sigma recovers d
    const double d = oracle::simpson(
        [&](double s) {
            const double z = a.zeta->d1(s);
            return std::sqrt(std::max(0.0, 1.0 - 2.0 * z * z));
        },
        0.0, a.length);
    CHECK(std::abs(d - 2.0) / 2.0 < 1e-8);

    // zeta(s(x)) = f(x)
    for (double x : {0.25, 0.9, 1.6}) {
        const double s = oracle::simpson([&](double y) { return std::sqrt(1.0 + 2.0 * df(y) * df(y)); }, 0.0, x);
        CHECK(std::abs(a.zeta->value(s) - f->value(x)) < 1e-6);
    }
    // reverse direction is the inverse
    const Profile back = arclength_to_graph(*a.zeta, CreaseMode::SpaceCrease);
    CHECK(back->domain_end() == doctest::Approx(2.0).epsilon(1e-10));
    for (double x : {0.1, 1.0, 1.9}) {
        CHECK(back->value(x) == doctest::Approx(f->value(x)).epsilon(1e-8));
        CHECK(back->d1(x) == doctest::Approx(df(x)).epsilon(1e-7));
    }
}

TEST_CASE("example crease-pattern graph converts back to the example profile") {
    const FundamentalData data = example_data();
    const Profile psi = arclength_to_graph(data.profile(), CreaseMode::PlaneCrease);
    const ArcLengthProfile a = graph_to_arclength_profile(*psi, CreaseMode::PlaneCrease);
    CHECK(a.length == doctest::Approx(2.0).epsilon(1e-9));
    for (int i = 0; i <= 40; ++i) {
        const double s = 0.05 * i;
        CHECK(std::abs(a.zeta->value(std::min(s, a.length)) - oracle::zeta(s)) < 1e-6);
    }
}

TEST_CASE("fundamental data caches the half-width") {
    const FundamentalData d = example_data();
    CHECK(d.b() == 1.0);
    CHECK(d.L() == 2.0);
    const double a = 0.5 * oracle::simpson([](double s) { return std::sqrt(1 - std::pow(oracle::dzeta(s), 2)); }, 0, 2);
    CHECK(d.half_width() == doctest::Approx(a).epsilon(1e-10));
    CHECK_THROWS_AS(FundamentalData(-1.0, make_hyperbolic(2.0, 1.0)), DomainError);
}
