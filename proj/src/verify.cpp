#include "creasefold/verify.hpp"

#include "creasefold/errors.hpp"
#include "creasefold/intersect.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace creasefold {

std::string GridSpec::label() const { return std::to_string(n_s) + "x" + std::to_string(n_v); }

namespace {

void require_grid(const GridSpec& grid) {
    if (grid.n_s < 3 || grid.n_v < 3)
        throw GridTooCoarse("grid " + grid.label() + " has fewer than 3 samples on an axis");
}

} // namespace

Metric measured_metric(const SurfaceSampler& X, double s, double v, double h) {
    const Vec3 xs = (X(s + h, v) - X(s - h, v)) / (2.0 * h);
    const Vec3 xv = (X(s, v + h) - X(s, v - h)) / (2.0 * h);
    return {xs.dot(xs), xs.dot(xv), xv.dot(xv)};
}

CheckReport check_isometry(const SurfaceSampler& X, const MetricField& reference, const GridSpec& grid,
                           double threshold, const std::string& name) {
    require_grid(grid);
    const double h = 1e-5 * grid.scale();
    CheckReport r{name, grid.label(), -1.0, Vec2::Zero(), threshold, false};
    grid.for_each([&](double s, double v) {
        const double d = measured_metric(X, s, v, h).distance(reference(s, v));
        if (!(d <= r.worst)) {
            r.worst = d;
            r.at = {s, v};
        }
    });
    r.pass = r.worst < threshold;
    return r;
}

double gaussian_curvature(const SurfaceSampler& X, double s, double v, double h) {
    const Vec3 c = X(s, v);
    const Vec3 sp = X(s + h, v), sm = X(s - h, v), vp = X(s, v + h), vm = X(s, v - h);
    const Vec3 xs = (sp - sm) / (2.0 * h);
    const Vec3 xv = (vp - vm) / (2.0 * h);
    const Vec3 xss = (sp - 2.0 * c + sm) / (h * h);
    const Vec3 xvv = (vp - 2.0 * c + vm) / (h * h);
    const Vec3 xsv = (X(s + h, v + h) - X(s + h, v - h) - X(s - h, v + h) + X(s - h, v - h)) / (4.0 * h * h);
    const double E = xs.dot(xs), F = xs.dot(xv), G = xv.dot(xv);
    const double det = E * G - F * F;
    if (det < 1e-12)
        throw DegenerateMetric("EG - F^2 = " + std::to_string(det));
    const Vec3 n = xs.cross(xv).normalized();
    const double l = xss.dot(n), m = xsv.dot(n), nn = xvv.dot(n);
    return (l * nn - m * m) / det;
}

CheckReport check_flatness(const SurfaceSampler& X, const GridSpec& grid, double threshold, const std::string& name) {
    require_grid(grid);
    const double h = 1e-4 * grid.scale();
    CheckReport r{name, grid.label(), -1.0, Vec2::Zero(), threshold, false};
    grid.for_each([&](double s, double v) {
        const double k = std::abs(gaussian_curvature(X, s, v, h));
        if (!(k <= r.worst)) {
            r.worst = k;
            r.at = {s, v};
        }
    });
    r.pass = r.worst < threshold;
    return r;
}

PlanarityReport check_crease_planarity(const std::vector<Vec3>& samples) {
    if (samples.size() < 4)
        throw CollinearSamples("planarity fit needs at least 4 samples");
    Eigen::Matrix2d scatter = Eigen::Matrix2d::Zero();
    for (const auto& p : samples) {
        const Vec2 yz(p.y(), p.z());
        scatter += yz * yz.transpose();
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(scatter);
    const double big = eig.eigenvalues()(1);
    if (!(big > 1e-24 * static_cast<double>(samples.size())))
        throw CollinearSamples("all samples lie on the x-axis");
    Vec2 n = eig.eigenvectors().col(0);
    if (n.y() < 0.0 || (n.y() == 0.0 && n.x() < 0.0))
        n = -n;
    PlanarityReport r;
    r.normal = Vec3(0.0, n.x(), n.y());
    r.lambda = (n.y() == 0.0 ? std::numeric_limits<double>::infinity() : -n.x() / n.y()) + 0.0;
    for (const auto& p : samples)
        r.max_deviation = std::max(r.max_deviation, std::abs(r.normal.dot(p)));
    return r;
}

CheckReport check_crease_development(const SpaceCurve& crease, const Vec3& ruling, const SpaceCurve& expected,
                                     double s_begin, double s_end, int steps, double threshold) {
    if (steps < 2)
        throw GridTooCoarse("development integration needs at least 2 steps");
    const Vec3 e = ruling.normalized();
    const auto kappa_g = [&](double s) {
        const Vec3 t = crease.derivative(s, 1);
        const Vec3 nu = t.cross(e).normalized();
        return crease.derivative(s, 2).dot(t.cross(nu));
    };
    // state (theta, x, y); the ruling develops onto (0, -1)
    const Vec3 t0 = crease.derivative(s_begin, 1);
    const double along = t0.dot(e);
    const double theta0 = std::atan2(-along, std::sqrt(std::max(0.0, 1.0 - along * along)));
    const Vec3 p0 = expected.position(s_begin);
    Eigen::Vector3d y(theta0, p0.x(), p0.y());
    const auto rhs = [&](double s, const Eigen::Vector3d& st) {
        return Eigen::Vector3d(kappa_g(s), std::cos(st(0)), std::sin(st(0)));
    };
    const double h = (s_end - s_begin) / steps;
    CheckReport r{"crease_development", std::to_string(steps), -1.0, Vec2::Zero(), threshold, false};
    for (int k = 0; k <= steps; ++k) {
        const double s = s_begin + h * k;
        const double d = (Vec2(y(1), y(2)) - Vec2(expected.position(s).x(), expected.position(s).y())).norm();
        if (!(d <= r.worst)) {
            r.worst = d;
            r.at = {s, 0.0};
        }
        if (k == steps)
            break;
        const Eigen::Vector3d k1 = rhs(s, y);
        const Eigen::Vector3d k2 = rhs(s + 0.5 * h, y + 0.5 * h * k1);
        const Eigen::Vector3d k3 = rhs(s + 0.5 * h, y + 0.5 * h * k2);
        const Eigen::Vector3d k4 = rhs(s + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    r.pass = r.worst < threshold;
    return r;
}

CheckReport check_dual_metrics(const DevelopableStrip& strip, const GridSpec& grid, double threshold) {
    require_grid(grid);
    const DevelopableStrip dual = dual_strip(strip);
    CheckReport r{"dual_metrics", grid.label(), -1.0, Vec2::Zero(), threshold, false};
    grid.for_each([&](double s, double v) {
        const double d = first_fundamental_form(strip, s, v).closed_form.distance(
            first_fundamental_form(dual, s, v).closed_form);
        if (!(d <= r.worst)) {
            r.worst = d;
            r.at = {s, v};
        }
    });
    r.pass = r.worst < threshold;
    return r;
}

double signed_volume(const TriMesh& mesh) {
    if (mesh.vertices.empty())
        return 0.0;
    Vec3 lo = mesh.vertices.front(), hi = lo;
    for (const auto& v : mesh.vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    const Vec3 o = 0.5 * (lo + hi);
    double acc = 0.0;
    for (const auto& t : mesh.triangles) {
        const Vec3 a = mesh.vertices[t[0]] - o;
        acc += a.dot((mesh.vertices[t[1]] - o).cross(mesh.vertices[t[2]] - o));
    }
    return acc / 6.0;
}

TopologyReport topology_report(const TriMesh& mesh, const Tolerances& tol) {
    mesh.check_indices();
    const double diag = mesh.diagonal();
    const double min_area = 1e-14 * diag * diag;
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
        const auto& t = mesh.triangles[i];
        const double area =
            0.5 * (mesh.vertices[t[1]] - mesh.vertices[t[0]]).cross(mesh.vertices[t[2]] - mesh.vertices[t[0]]).norm();
        if (area < min_area)
            throw DegenerateTriangle("triangle " + std::to_string(i) + " has area " + std::to_string(area));
    }
    const EdgeStats st = edge_statistics(mesh);
    TopologyReport r;
    r.vertices = mesh.vertices.size();
    r.edges = st.edges;
    r.faces = mesh.triangles.size();
    r.euler_characteristic =
        static_cast<long>(r.vertices) - static_cast<long>(r.edges) + static_cast<long>(r.faces);
    r.boundary_edges = st.boundary_edges;
    r.nonmanifold_edges = st.nonmanifold_edges;
    r.closed = st.boundary_edges == 0 && st.nonmanifold_edges == 0;
    r.consistently_oriented = st.consistently_oriented;
    r.self_intersections = self_intersections(mesh, tol.seam * diag).size();
    r.signed_volume = signed_volume(mesh);
    r.volume_valid = r.closed && r.consistently_oriented;
    return r;
}

double enclosed_volume(const TriMesh& mesh) {
    mesh.check_indices();
    const EdgeStats st = edge_statistics(mesh);
    if (st.boundary_edges > 0 || st.nonmanifold_edges > 0)
        throw NotClosed(std::to_string(st.boundary_edges) + " boundary and " + std::to_string(st.nonmanifold_edges) +
                        " nonmanifold edges");
    if (!st.consistently_oriented)
        throw InconsistentOrientation("adjacent triangles traverse a shared edge in the same direction");
    return signed_volume(mesh);
}

} // namespace creasefold
