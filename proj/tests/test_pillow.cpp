#include "creasefold/errors.hpp"
#include "creasefold/pillow.hpp"
#include "creasefold/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace creasefold;

namespace {

double sigma(double s) { return std::sqrt(std::max(0.0, 1.0 - 2.0 * std::pow(oracle::dzeta(s), 2))); }

// sigma ~ sqrt(s) at both ends; s = a + u² (and mirrored) restores Simpson's full order
double integral_of_sigma(double a, double b) {
    const double m = 0.5 * (a + b), r = std::sqrt(m - a);
    const auto left = [&](double u) { return sigma(a + u * u) * 2.0 * u; };
    const auto right = [&](double u) { return sigma(b - u * u) * 2.0 * u; };
    return oracle::simpson(left, 0.0, r) + oracle::simpson(right, 0.0, r);
}

bool has_vertex(const TriMesh& m, const Vec3& p, double tol) {
    return std::any_of(m.vertices.begin(), m.vertices.end(), [&](const Vec3& q) { return (q - p).norm() < tol; });
}

} // namespace

TEST_CASE("crease point at s = 1 against the fixed-panel oracle") {
    const CreasePoint c = crease_curve(example_data(), 1.0);
    // plain fixed-panel Simpson converges like n^-1.5 here
    CHECK(std::abs(c.position.x() - oracle::simpson(sigma, 0.0, 1.0)) < 2e-7);
    const double x1 = integral_of_sigma(0.0, 1.0);
    CHECK(std::abs(c.position.x() - x1) < 1e-12);
    CHECK(x1 == doctest::Approx(0.711958660).epsilon(1e-9));
    CHECK(c.position.y() == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
    CHECK(c.position.z() == c.position.y());
    CHECK((c.tangent - Vec3(1, 0, 0)).norm() < 1e-15);
}

TEST_CASE("crease is unit-speed, lies in y = z and vanishes at the ends") {
    const QuarterParametrization q(example_data());
    const PillowCrease& c = q.crease();
    const Vec3 fd = oracle::central_diff3([&](double s) { return c.position(s); }, 0.5, 1e-5);
    CHECK(std::abs(fd.norm() - 1.0) < 1e-8);
    for (int i = 1; i < 100; ++i) {
        const double s = 0.02 * i;
        const Vec3 p = c.position(s);
        CHECK(p.dot(Vec3(0, 1, -1)) == 0.0);
        CHECK(std::abs(c.derivative(s, 1).norm() - 1.0) < 1e-8);
    }
    for (double s : {1e-6, 1e-9})
        CHECK(c.position(s).tail<2>().norm() < 1e-5);
    CHECK(c.position(0.0).tail<2>().norm() < 1e-15);
    CHECK(std::abs(c.extent() - 2.0 * integral_of_sigma(0.0, 1.0)) < 1e-12);
    CHECK_THROWS_AS(c.derivative(0.0, 1), EndpointSingularity);
    CHECK_THROWS_AS(c.derivative(2.0, 2), EndpointSingularity);
}

TEST_CASE("quarter parametrization angles and crease consistency") {
    const QuarterParametrization q(example_data());
    CHECK(q.alpha()(1.0) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
    CHECK(q.upper_strip().beta(1.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
    for (double s : {0.0, 0.3, 1.0, 1.999, 2.0}) {
        CHECK((q.point(s, 0.0) - q.crease().position(s)).norm() == 0.0);
        CHECK((q.upper_point(s, 0.0) - q.lower_point(s, 0.0)).norm() == 0.0);
    }
    const auto [lo, hi] = q.guarded_range();
    CHECK(lo == doctest::Approx(2e-3));
    CHECK(hi == doctest::Approx(2.0 - 2e-3));
    CHECK_THROWS_AS(q.point(1.0, 0.5), OutOfDomain);
    CHECK_THROWS_AS(q.point(1.0, -0.7), OutOfDomain);
    CHECK_THROWS_AS(q.point(2.1, 0.0), OutOfDomain);
}

TEST_CASE("strip images: upper in a graph over x, lower on a single cylinder") {
    const QuarterParametrization q(example_data());
    for (int i = 0; i <= 20; ++i) {
        const double s = 0.1 * i;
        const double z = oracle::zeta(s);
        const Vec3 c = q.crease().position(s);
        for (int j = 0; j <= 4; ++j) {
            const double v = z * j / 4.0;
            const Vec3 p = q.point(s, v);
            CHECK(p.z() >= -1e-15);
            CHECK(p.z() == doctest::Approx(z - v));
            CHECK(p.y() == doctest::Approx(z));
            const double w = (z - 1.0) * j / 4.0;
            const Vec3 l = q.point(s, w);
            CHECK(l.x() == c.x());
            CHECK(l.z() == c.z());
            CHECK(l.y() == doctest::Approx(z - w));
            CHECK(l.y() <= 1.0 + 1e-15);
        }
    }
}

TEST_CASE("both strips carry the flat metric (1, -zeta', 1)") {
    const QuarterParametrization q(example_data());
    const double h = 1e-5 * 2.0;
    const SurfaceSampler up = [&](double s, double v) { return q.upper_point(s, v); };
    const SurfaceSampler lo = [&](double s, double v) { return q.lower_point(s, v); };
    for (int i = 1; i < 40; ++i) {
        const double s = 0.05 * i;
        for (double f : {0.2, 0.5, 0.8}) {
            const Metric mu = measured_metric(up, s, f * oracle::zeta(s), h);
            const Metric ml = measured_metric(lo, s, f * (oracle::zeta(s) - 1.0), h);
            for (const Metric& m : {mu, ml})
                CHECK(std::abs(m.E - 1.0) + std::abs(m.F + oracle::dzeta(s)) + std::abs(m.G - 1.0) < 1e-6);
        }
    }
}

TEST_CASE("assembled pillow box is a closed sphere with positive bounded volume") {
    const QuarterParametrization q(example_data());
    const TriMesh m = assemble_box(q, 64, 32);
    const EdgeStats st = edge_statistics(m);
    CHECK(st.boundary_edges == 0);
    CHECK(st.nonmanifold_edges == 0);
    CHECK(st.consistently_oriented);
    CHECK(oracle::euler_characteristic(m) == 2);
    const double vol = enclosed_volume(m);
    const double a = q.data().half_width();
    CHECK(vol > 0.0);
    CHECK(vol < 2.0 * a * 2.0 * 1.0 * 2.0 * (std::sqrt(2.0) - 1.0));
    CHECK_THROWS_AS(assemble_box(q, 1, 32), DomainError);
    CHECK_THROWS_AS(assemble_box(q, 64, 1), DomainError);
}

TEST_CASE("assembly is symmetric under both reflections") {
    const QuarterParametrization q(example_data());
    const TriMesh m = assemble_box(q, 16, 8);
    const double tol = 1e-9 * m.diagonal();
    for (const auto& p : m.vertices) {
        CHECK(has_vertex(m, reflect_vertical(p, 1.0), tol));
        CHECK(has_vertex(m, reflect_horizontal(p), tol));
    }
    // fixed-point sets are shared, not duplicated
    std::size_t on_y_b = 0, on_z_0 = 0;
    for (const auto& p : m.vertices) {
        on_y_b += std::abs(p.y() - 1.0) < tol;
        on_z_0 += std::abs(p.z()) < tol;
    }
    // the vertical ends meet z = 0 at the two corner columns
    CHECK(on_y_b == 2 * 17 - 2);
    // interior horizontal-end vertices, plus the s = 0 and s = L columns, which lie in z = 0
    CHECK(on_z_0 == 2 * (16 - 1) + 2 * (2 * 4 + 1));
}

TEST_CASE("corner vertices sit at the crease endpoints") {
    const QuarterParametrization q(example_data());
    const TriMesh m = assemble_box(q, 8, 4);
    const double d = q.crease().extent();
    CHECK(has_vertex(m, Vec3(0, 0, 0), 1e-15));
    CHECK(has_vertex(m, Vec3(d, 0, 0), 1e-12));
    CHECK(has_vertex(m, Vec3(0, 2, 0), 1e-15));
    CHECK(has_vertex(m, Vec3(d, 2, 0), 1e-12));
}
