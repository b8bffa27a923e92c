#pragma once

#include "creasefold/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using creasefold::Vec3;

/// Composite Simpson rule with a fixed even panel count.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 10000) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// zeta(s) = sqrt(2) - sqrt((s - 1)^2 + 1) on [0, 2]
inline double zeta(double s) { return std::sqrt(2.0) - std::hypot(s - 1.0, 1.0); }
inline double dzeta(double s) { return (1.0 - s) / std::hypot(s - 1.0, 1.0); }
inline double ddzeta(double s) { return -1.0 / std::pow((s - 1.0) * (s - 1.0) + 1.0, 1.5); }

inline double sigma(double s) { return std::sqrt(std::max(0.0, 1.0 - 2.0 * dzeta(s) * dzeta(s))); }

/// x-coordinate of the pillow crease, int_0^s sigma; s = u² removes the square-root endpoint.
inline double crease_x(double s) {
    if (s > 1.0)
        return 2.0 * crease_x(1.0) - crease_x(2.0 - s);
    return simpson([](double u) { return sigma(u * u) * 2.0 * u; }, 0.0, std::sqrt(s));
}

/// x-coordinate of the developed crease, int_0^s sqrt(1 - zeta'^2).
inline double pattern_x(double s) { return std::asinh(s - 1.0) + std::asinh(1.0); }

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline Vec3 central_diff3(const std::function<Vec3(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Axis-aligned unit cube [0,1]^3, 8 vertices, 12 outward-wound triangles.
inline creasefold::TriMesh unit_cube() {
    creasefold::TriMesh m;
    for (int i = 0; i < 8; ++i)
        m.vertices.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
    m.triangles = {{0, 2, 1}, {1, 2, 3}, {4, 5, 6}, {5, 7, 6}, {0, 1, 4}, {1, 5, 4},
                   {2, 6, 3}, {3, 6, 7}, {0, 4, 2}, {2, 4, 6}, {1, 3, 5}, {3, 7, 5}};
    return m;
}

/// V - E + F counted from scratch.
inline long euler_characteristic(const creasefold::TriMesh& m) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& t : m.triangles)
        for (int k = 0; k < 3; ++k)
            edges.emplace_back(std::min(t[k], t[(k + 1) % 3]), std::max(t[k], t[(k + 1) % 3]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return static_cast<long>(m.vertices.size()) - static_cast<long>(edges.size()) +
           static_cast<long>(m.triangles.size());
}

} // namespace oracle
