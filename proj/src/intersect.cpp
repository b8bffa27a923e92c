#include "creasefold/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>

namespace creasefold {

namespace {

struct Interval {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double x) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    bool empty() const { return lo > hi; }
};

// Signed distances of tri's corners to the plane through p0 with unit normal n.
std::array<double, 3> distances(const std::array<Vec3, 3>& tri, const Vec3& p0, const Vec3& n) {
    return {n.dot(tri[0] - p0), n.dot(tri[1] - p0), n.dot(tri[2] - p0)};
}

// Projection onto dir of the set tri ∩ plane, given the corner distances.
Interval cut_interval(const std::array<Vec3, 3>& tri, const std::array<double, 3>& d, const Vec3& dir,
                      double eps) {
    Interval out;
    for (int k = 0; k < 3; ++k) {
        if (std::abs(d[k]) <= eps)
            out.add(dir.dot(tri[k]));
    }
    for (int k = 0; k < 3; ++k) {
        const int l = (k + 1) % 3;
        if (std::abs(d[k]) > eps && std::abs(d[l]) > eps && (d[k] > 0) != (d[l] > 0)) {
            const Vec3 p = tri[k] + (tri[l] - tri[k]) * (d[k] / (d[k] - d[l]));
            out.add(dir.dot(p));
        }
    }
    return out;
}

// True when no corner lies strictly on one of the two sides: the triangle at most touches the plane.
bool one_side(const std::array<double, 3>& d, double eps) {
    const bool above = d[0] > eps || d[1] > eps || d[2] > eps;
    const bool below = d[0] < -eps || d[1] < -eps || d[2] < -eps;
    return !(above && below);
}

std::optional<Vec3> unit_normal(const std::array<Vec3, 3>& t) {
    const Vec3 n = (t[1] - t[0]).cross(t[2] - t[0]);
    const double len = n.norm();
    if (!(len > 0.0))
        return std::nullopt;
    return n / len;
}

} // namespace

bool triangles_cross(const std::array<Vec3, 3>& a, const std::array<Vec3, 3>& b, double contact_tol) {
    const auto na = unit_normal(a);
    const auto nb = unit_normal(b);
    if (!na || !nb)
        return false;
    const double eps = contact_tol;

    const auto db = distances(b, a[0], *na);
    if (one_side(db, eps))
        return false;
    const auto da = distances(a, b[0], *nb);
    if (one_side(da, eps))
        return false;

    const Vec3 dir = na->cross(*nb);
    const double len = dir.norm();
    if (len < 1e-12)
        return false;
    const Vec3 u = dir / len;

    const Interval ia = cut_interval(a, da, u, eps);
    const Interval ib = cut_interval(b, db, u, eps);
    if (ia.empty() || ib.empty())
        return false;
    return std::min(ia.hi, ib.hi) - std::max(ia.lo, ib.lo) > contact_tol;
}

TriangleBvh::TriangleBvh(const TriMesh& mesh) {
    const std::size_t n = mesh.triangles.size();
    boxes_.resize(n);
    std::vector<Vec3> centers(n);
    for (std::size_t i = 0; i < n; ++i) {
        Eigen::AlignedBox3d box;
        for (int k : mesh.triangles[i])
            box.extend(mesh.vertices[static_cast<std::size_t>(k)]);
        boxes_[i] = box;
        centers[i] = box.center();
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    if (n > 0) {
        nodes_.reserve(2 * n);
        build(0, static_cast<int>(n), boxes_, centers);
    }
}

int TriangleBvh::build(int first, int count, const std::vector<Eigen::AlignedBox3d>& boxes,
                       const std::vector<Vec3>& centers) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    Eigen::AlignedBox3d box;
    Eigen::AlignedBox3d cbox;
    for (int i = first; i < first + count; ++i) {
        box.extend(boxes[order_[i]]);
        cbox.extend(centers[order_[i]]);
    }
    nodes_[id].box = box;
    if (count <= 4) {
        nodes_[id].first = first;
        nodes_[id].count = count;
        return id;
    }
    int axis;
    cbox.sizes().maxCoeff(&axis);
    const int mid = first + count / 2;
    std::nth_element(order_.begin() + first, order_.begin() + mid, order_.begin() + first + count,
                     [&](int x, int y) {
                         if (centers[x][axis] != centers[y][axis])
                             return centers[x][axis] < centers[y][axis];
                         return x < y;
                     });
    const int left = build(first, mid - first, boxes, centers);
    const int right = build(mid, first + count - mid, boxes, centers);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

bool TriangleBvh::overlap(const Eigen::AlignedBox3d& a, const Eigen::AlignedBox3d& b, double pad) {
    for (int k = 0; k < 3; ++k) {
        if (a.min()[k] > b.max()[k] + pad || b.min()[k] > a.max()[k] + pad)
            return false;
    }
    return true;
}

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Angle of the half-plane from the line (p, u) towards o.
double fan_angle(const Vec3& p, const Vec3& u, const Vec3& e1, const Vec3& e2, const Vec3& o) {
    Vec3 w = o - p;
    w -= w.dot(u) * u;
    return std::atan2(w.dot(e2), w.dot(e1));
}

// Whether angle x lies strictly inside the counter-clockwise arc from lo to hi.
bool in_arc(double lo, double hi, double x) {
    const double two_pi = 2.0 * std::numbers::pi;
    const auto wrap = [two_pi](double a) { return a - two_pi * std::floor(a / two_pi); };
    return wrap(x - lo) < wrap(hi - lo);
}

} // namespace

std::vector<std::pair<int, int>> self_intersections(const TriMesh& mesh, double contact_tol) {
    const TriangleBvh bvh(mesh);
    std::vector<std::pair<int, int>> hits;
    std::vector<std::pair<EdgeKey, EdgeKey>> touching;
    const auto& V = mesh.vertices;
    const auto corners = [&](int t) {
        const auto& tri = mesh.triangles[static_cast<std::size_t>(t)];
        return std::array<Vec3, 3>{V[tri[0]], V[tri[1]], V[tri[2]]};
    };
    const auto near = [&](int x, int y) { return (V[x] - V[y]).norm() <= contact_tol; };
    bvh.for_each_candidate_pair(contact_tol, [&](int i, int j) {
        const auto& ti = mesh.triangles[static_cast<std::size_t>(i)];
        const auto& tj = mesh.triangles[static_cast<std::size_t>(j)];
        for (int x : ti)
            for (int y : tj)
                if (x == y)
                    return;
        if (triangles_cross(corners(i), corners(j), contact_tol)) {
            hits.emplace_back(i, j);
            return;
        }
        for (int k = 0; k < 3; ++k) {
            const int a0 = ti[k], a1 = ti[(k + 1) % 3];
            for (int l = 0; l < 3; ++l) {
                const int b0 = tj[l], b1 = tj[(l + 1) % 3];
                if ((near(a0, b0) && near(a1, b1)) || (near(a0, b1) && near(a1, b0)))
                    touching.emplace_back(edge_key(a0, a1), edge_key(b0, b1));
            }
        }
    });

    // Sheets meeting along coincident but distinct edges cross when their fans interleave.
    if (!touching.empty()) {
        std::sort(touching.begin(), touching.end());
        touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
        std::map<EdgeKey, std::vector<int>> faces;
        for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
            const auto& tri = mesh.triangles[t];
            for (int k = 0; k < 3; ++k)
                faces[edge_key(tri[k], tri[(k + 1) % 3])].push_back(static_cast<int>(t));
        }
        const auto opposite = [&](int t, const EdgeKey& e) {
            for (int x : mesh.triangles[static_cast<std::size_t>(t)])
                if (x != e.first && x != e.second)
                    return V[x];
            return V[e.first];
        };
        constexpr double angle_tol = 1e-9;
        for (const auto& [ea, eb] : touching) {
            const auto& fa = faces[ea];
            const auto& fb = faces[eb];
            if (fa.size() != 2 || fb.size() != 2)
                continue;
            const Vec3 p = V[ea.first];
            const Vec3 d = V[ea.second] - p;
            if (!(d.norm() > contact_tol))
                continue;
            const Vec3 u = d.normalized();
            const Vec3 e1 = u.unitOrthogonal();
            const Vec3 e2 = u.cross(e1);
            const double a0 = fan_angle(p, u, e1, e2, opposite(fa[0], ea));
            const double a1 = fan_angle(p, u, e1, e2, opposite(fa[1], ea));
            const double b0 = fan_angle(p, u, e1, e2, opposite(fb[0], eb));
            const double b1 = fan_angle(p, u, e1, e2, opposite(fb[1], eb));
            bool tangent = false;
            for (double x : {a0, a1})
                for (double y : {b0, b1})
                    tangent = tangent || std::abs(std::remainder(x - y, 2.0 * std::numbers::pi)) < angle_tol;
            if (tangent || in_arc(a0, a1, b0) == in_arc(a0, a1, b1))
                continue;
            hits.emplace_back(std::min(fa[0], fb[0]), std::max(fa[0], fb[0]));
        }
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

} // namespace creasefold
