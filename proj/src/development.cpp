#include "creasefold/development.hpp"

#include "creasefold/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace creasefold {

CreasePatternCurve::CreasePatternCurve(Profile zeta) : zeta_(std::move(zeta)) {
    const auto z = zeta_;
    x_ = CumulativeIntegral(
        [z](double s) {
            const double d = z->d1(s);
            return std::sqrt(std::max(0.0, 1.0 - d * d));
        },
        0.0, z->domain_end(), 256, QuadratureOptions{1e-13});
}

Vec3 CreasePatternCurve::position(double s) const { return {x_(s), zeta_->value(s), 0.0}; }

Vec3 CreasePatternCurve::derivative(double s, int order) const {
    const double dz = zeta_->d1(s);
    const double w = std::sqrt(std::max(0.0, 1.0 - dz * dz));
    if (order == 1)
        return {w, dz, 0.0};
    if (!(w > 0.0))
        throw NonFiniteEvaluation("crease pattern has a vertical tangent at s = " + std::to_string(s));
    const double ddz = zeta_->d2(s);
    return ddz * Vec3(-dz / w, 1.0, 0.0);
}

double CreasePatternCurve::slope(double s) const {
    const double dz = zeta_->d1(s);
    return std::abs(dz) / std::sqrt(1.0 - dz * dz);
}

DevelopingMap::DevelopingMap(FundamentalData data)
    : data_(std::move(data)), gamma_(std::make_shared<CreasePatternCurve>(data_.zeta())) {}

QuarterDomainMap DevelopingMap::domain_map() const {
    QuarterDomainMap m;
    m.length = data_.L();
    m.b = data_.b();
    m.zeta = [z = data_.zeta()](double s) { return z->value(s); };
    m.point = [g = gamma_](double s, double v) -> Vec3 { return g->position(s) + v * Vec3(0.0, -1.0, 0.0); };
    return m;
}

DevelopingMap developing_map(const FundamentalData& data) { return DevelopingMap(data); }

Profile crease_pattern_graph(const FundamentalData& data) {
    return arclength_to_graph(data.profile(), CreaseMode::PlaneCrease);
}

bool ConditionReport::pass() const {
    return !conditions.empty()
        && std::all_of(conditions.begin(), conditions.end(), [](const ConditionMargin& c) { return c.pass; });
}

const ConditionMargin* ConditionReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name)
            return &c;
    return nullptr;
}

ConditionReport validate_pattern_conditions(const ProfileFunction& psi, double b, int n_samples,
                                            const Tolerances& tol) {
    if (n_samples < 3)
        throw DomainError("pattern validation needs at least 3 samples");
    const double w = psi.domain_end();
    ConditionReport report;

    const double end_gap = std::max(std::abs(psi.value(0.0)), std::abs(psi.value(w)));
    report.conditions.push_back({"I", tol.boundary - end_gap, end_gap == std::abs(psi.value(0.0)) ? 0.0 : w,
                                 end_gap < tol.boundary});

    double slope_margin = std::numeric_limits<double>::infinity(), slope_at = 0.0;
    double curv_min = std::numeric_limits<double>::infinity(), curv_max = -curv_min, curv_at = 0.0;
    double fit_margin = std::numeric_limits<double>::infinity(), fit_at = 0.0;
    double min_abs_curv = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= n_samples; ++i) {
        const double x = w * i / (n_samples + 1);
        const double y = psi.value(x), dy = psi.d1(x), ddy = psi.d2(x);
        if (1.0 - std::abs(dy) < slope_margin) {
            slope_margin = 1.0 - std::abs(dy);
            slope_at = x;
        }
        curv_min = std::min(curv_min, ddy);
        curv_max = std::max(curv_max, ddy);
        if (std::abs(ddy) < min_abs_curv) {
            min_abs_curv = std::abs(ddy);
            curv_at = x;
        }
        const double m = std::min(y, b - y);
        if (m < fit_margin) {
            fit_margin = m;
            fit_at = x;
        }
    }
    report.conditions.push_back({"II", slope_margin, slope_at, slope_margin > 0.0});
    // one sign: the margin is the smallest |psi''| if signs agree, else minus the spread across zero
    const bool one_sign = (curv_max < 0.0) || (curv_min > 0.0);
    const double curv_margin = one_sign ? min_abs_curv : -std::min(std::abs(curv_min), std::abs(curv_max));
    report.conditions.push_back({"III", curv_margin, curv_at, curv_margin > 0.0});
    report.conditions.push_back({"IV", fit_margin, fit_at, fit_margin > 0.0});
    return report;
}

ConditionReport validate_pattern_conditions(std::span<const Vec2> polyline, double b, const Tolerances& tol) {
    if (polyline.size() < 4)
        throw DomainError("pattern polyline needs at least 4 points");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < polyline.size(); ++i) {
        if (i > 0 && !(polyline[i].x() > polyline[i - 1].x()))
            throw NonGraph("polyline x is not strictly increasing at point " + std::to_string(i));
        xs.push_back(polyline[i].x() - polyline.front().x());
        ys.push_back(polyline[i].y());
    }
    const Profile spline = make_spline_table(std::move(xs), std::move(ys));
    return validate_pattern_conditions(*spline, b, static_cast<int>(polyline.size()) - 2, tol);
}

TriMesh double_rectangle_mesh(double a, double b, int n) {
    if (n < 2)
        throw DomainError("double rectangle needs n >= 2");
    TriMesh mesh;
    const int side = n + 1;
    std::vector<int> sheet0(static_cast<std::size_t>(side * side)), sheet1(sheet0.size());
    const auto on_border = [n](int i, int j) { return i == 0 || j == 0 || i == n || j == n; };
    const auto id = [side](int i, int j) { return static_cast<std::size_t>(i * side + j); };
    for (int sheet = 0; sheet < 2; ++sheet) {
        auto& idx = sheet == 0 ? sheet0 : sheet1;
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                if (sheet == 1 && on_border(i, j)) {
                    idx[id(i, j)] = sheet0[id(i, j)];
                    continue;
                }
                idx[id(i, j)] = static_cast<int>(mesh.vertices.size());
                mesh.vertices.emplace_back(2.0 * a * i / n, 2.0 * b * j / n, 0.0);
            }
        }
    }
    for (int sheet = 0; sheet < 2; ++sheet) {
        const auto& idx = sheet == 0 ? sheet0 : sheet1;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int p00 = idx[id(i, j)], p10 = idx[id(i + 1, j)];
                const int p11 = idx[id(i + 1, j + 1)], p01 = idx[id(i, j + 1)];
                // cut every quad through the corner nearest the rectangle's corner
                const bool lower_left_diag = (2 * i + 1 < n) == (2 * j + 1 < n);
                std::array<std::array<int, 3>, 2> tris;
                if (lower_left_diag)
                    tris = {{{p00, p10, p11}, {p00, p11, p01}}};
                else
                    tris = {{{p00, p10, p01}, {p10, p11, p01}}};
                for (auto t : tris) {
                    if (sheet == 1)
                        std::swap(t[1], t[2]);
                    mesh.triangles.push_back(t);
                }
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        for (const auto& [a0, a1] : {std::pair{id(k, 0), id(k + 1, 0)}, std::pair{id(k, n), id(k + 1, n)},
                                     std::pair{id(0, k), id(0, k + 1)}, std::pair{id(n, k), id(n, k + 1)}}) {
            const int x = sheet0[a0], y = sheet0[a1];
            mesh.seam_edges.push_back({std::min(x, y), std::max(x, y)});
        }
    }
    std::sort(mesh.seam_edges.begin(), mesh.seam_edges.end());
    return mesh;
}

TriMesh double_rectangle_mesh(const FundamentalData& data, int n) {
    return double_rectangle_mesh(data.half_width(), data.b(), n);
}

} // namespace creasefold
