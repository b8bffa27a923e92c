#pragma once

#include "creasefold/folding_kernel.hpp"
#include "creasefold/geometry.hpp"
#include "creasefold/mesh.hpp"
#include "creasefold/profile.hpp"
#include "creasefold/tolerances.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace creasefold {

using SurfaceSampler = std::function<Vec3(double, double)>;
using MetricField = std::function<Metric(double, double)>;

/// n_s x n_v sample grid over s in [s_begin, s_end] (inclusive) and, per column,
/// v strictly inside v_range(s).
struct GridSpec {
    int n_s = 64;
    int n_v = 32;
    double s_begin = 0.0;
    double s_end = 1.0;
    std::function<std::pair<double, double>(double)> v_range = [](double) { return std::pair{0.0, 1.0}; };
    /// Scale for finite-difference steps; 0 means s_end - s_begin.
    double length = 0.0;

    std::string label() const;
    double scale() const { return length > 0.0 ? length : s_end - s_begin; }

    template <typename Visit>
    void for_each(Visit&& visit) const {
        for (int i = 0; i < n_s; ++i) {
            const double s = n_s == 1 ? s_begin : s_begin + (s_end - s_begin) * i / (n_s - 1);
            const auto [v0, v1] = v_range(s);
            for (int j = 0; j < n_v; ++j)
                visit(s, v0 + (v1 - v0) * (j + 1) / (n_v + 1));
        }
    }
};

struct CheckReport {
    std::string check;
    std::string grid;
    double worst = 0.0;
    Vec2 at = Vec2::Zero();  // (s, v) or (s, 0) of the worst residual
    double threshold = 0.0;
    bool pass = false;
};

/// Central-difference first fundamental form with step h.
Metric measured_metric(const SurfaceSampler& X, double s, double v, double h);

/// Componentwise worst |measured - reference|. Throws GridTooCoarse below 3 samples per axis.
CheckReport check_isometry(const SurfaceSampler& X, const MetricField& reference, const GridSpec& grid,
                           double threshold = 1e-6, const std::string& name = "isometry");

/// Gaussian curvature (LN - M²) / (EG - F²) from second differences with step h.
/// Throws DegenerateMetric when EG - F² < 1e-12.
double gaussian_curvature(const SurfaceSampler& X, double s, double v, double h);

CheckReport check_flatness(const SurfaceSampler& X, const GridSpec& grid, double threshold = 1e-5,
                           const std::string& name = "flatness");

struct PlanarityReport {
    Vec3 normal = Vec3::Zero();  // (0, b, c), unit
    double max_deviation = 0.0;
    double lambda = 0.0;         // -b / c, the slope of z = lambda y
};

/// Least-squares plane b y + c z = 0 through the x-axis. Throws CollinearSamples
/// for fewer than 4 samples or when all samples lie on a line through the x-axis.
PlanarityReport check_crease_planarity(const std::vector<Vec3>& samples);

/// Rebuilds the planar development of a crease from its geodesic curvature on the
/// cylindrical strip c + v ruling and compares it with the expected plane curve.
CheckReport check_crease_development(const SpaceCurve& crease, const Vec3& ruling, const SpaceCurve& expected,
                                     double s_begin, double s_end, int steps = 20000, double threshold = 1e-6);

/// Worst gap between the closed-form metrics of a strip and its dual at equal (s, v).
CheckReport check_dual_metrics(const DevelopableStrip& strip, const GridSpec& grid, double threshold = 1e-8);

struct TopologyReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    long euler_characteristic = 0;
    bool closed = false;
    std::size_t boundary_edges = 0;
    std::size_t nonmanifold_edges = 0;
    bool consistently_oriented = false;
    std::size_t self_intersections = 0;
    double signed_volume = 0.0;
    bool volume_valid = false;  // closed and consistently oriented
};

/// Throws DegenerateTriangle for a face with area below 1e-14 diag².
TopologyReport topology_report(const TriMesh& mesh, const Tolerances& tol = {});

/// (1/6) sum det(v1 - o, v2 - o, v3 - o) about the bounding-box center o, without any closedness check.
double signed_volume(const TriMesh& mesh);

/// Throws NotClosed or InconsistentOrientation.
double enclosed_volume(const TriMesh& mesh);

} // namespace creasefold
