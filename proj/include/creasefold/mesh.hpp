#pragma once

#include "creasefold/geometry.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace creasefold {

/// Indexed triangle mesh.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
    /// Edges (sorted index pairs) lying on welded seams between assembled pieces.
    std::vector<std::array<int, 2>> seam_edges;

    /// Bounding-box diagonal length.
    double diagonal() const;
    /// Throws DomainError if an index is out of range or repeated within a triangle.
    void check_indices() const;
};

struct EdgeStats {
    std::size_t edges = 0;
    std::size_t boundary_edges = 0;     // one incident triangle
    std::size_t nonmanifold_edges = 0;  // three or more
    bool consistently_oriented = true;  // every 2-triangle edge traversed once each way
};

EdgeStats edge_statistics(const TriMesh& mesh);

/// A map on the quarter domain U = {0 <= s <= L, zeta(s) - b <= v <= zeta(s)}.
/// v < 0 is the lower strip, v > 0 the upper strip, v = 0 the crease.
struct QuarterDomainMap {
    double length = 0.0;
    double b = 0.0;
    std::function<double(double)> zeta;
    std::function<Vec3(double, double)> point;
    /// zeta(0) = zeta(L) = 0: snap the end values to zero and collapse the
    /// upper strip's end columns onto the crease endpoints.
    bool pinned_ends = true;
};

/// One sampled quarter piece plus the vertex lists of its four boundary arcs.
struct QuarterMesh {
    TriMesh mesh;
    int crease_row = 0;                 // grid row holding v = 0
    std::vector<int> vertical_end;      // v = zeta - b, ordered by s
    std::vector<int> horizontal_end;    // v = zeta, ordered by s, crease endpoints excluded when pinned
    std::vector<int> start_column;      // s = 0, ordered by v
    std::vector<int> end_column;        // s = L, ordered by v
    std::vector<int> crease;            // v = 0, ordered by s
};

/// Samples U on a grid with n_s columns and n_v rows (n_v/2 rows in the upper
/// strip, the rest in the lower one) and splits every quad into two triangles.
/// Quads left of s = L/2 are cut along the (i, r)-(i+1, r+1) diagonal, the rest
/// along the other one, so no triangle has all three corners on the boundary.
/// Triangles are wound so the assembled t = 0 box has outward normals.
QuarterMesh sample_and_triangulate(const QuarterDomainMap& map, int n_s, int n_v);

struct SeamTally {
    std::string name;
    std::size_t welded = 0;
    std::size_t unwelded = 0;
};

struct AssemblyResult {
    TriMesh mesh;
    std::vector<SeamTally> seams;

    bool all_welded() const;
    std::size_t unwelded() const;
};

/// Builds P ∪ rho_V(P) ∪ rho_H(P) ∪ rho_H rho_V(P) and welds corresponding
/// boundary vertices whose distance is below weld_rel * diagonal. Pairs that
/// are too far apart stay separate and are counted as unwelded.
AssemblyResult assemble_reflected(const QuarterDomainMap& map, int n_s, int n_v, double weld_rel);

} // namespace creasefold
