#include "creasefold/mesh.hpp"

#include "creasefold/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace creasefold {

double TriMesh::diagonal() const {
    if (vertices.empty())
        return 0.0;
    Vec3 lo = vertices.front(), hi = vertices.front();
    for (const auto& v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    return (hi - lo).norm();
}

void TriMesh::check_indices() const {
    const int n = static_cast<int>(vertices.size());
    for (const auto& t : triangles) {
        for (int k : t)
            if (k < 0 || k >= n)
                throw DomainError("triangle index " + std::to_string(k) + " out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw DomainError("triangle repeats a vertex index");
    }
}

EdgeStats edge_statistics(const TriMesh& mesh) {
    // value: (incidence count, signed traversal balance)
    std::map<std::pair<int, int>, std::pair<int, int>> edges;
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            const int a = t[k], b = t[(k + 1) % 3];
            auto& e = edges[{std::min(a, b), std::max(a, b)}];
            e.first += 1;
            e.second += (a < b) ? 1 : -1;
        }
    }
    EdgeStats st;
    st.edges = edges.size();
    for (const auto& [key, e] : edges) {
        if (e.first == 1)
            ++st.boundary_edges;
        else if (e.first > 2)
            ++st.nonmanifold_edges;
        else if (e.second != 0)
            st.consistently_oriented = false;
    }
    return st;
}

QuarterMesh sample_and_triangulate(const QuarterDomainMap& map, int n_s, int n_v) {
    if (n_s < 2 || n_v < 2)
        throw DomainError("quarter grid needs n_s >= 2 and n_v >= 2");
    if (!map.zeta || !map.point || !(map.length > 0.0) || !(map.b > 0.0))
        throw DomainError("quarter domain map is incomplete");

    const int n_up = n_v / 2;
    const int n_low = n_v - n_up;
    const int cols = n_s + 1;
    const int rows = n_v + 1;

    QuarterMesh out;
    out.crease_row = n_low;
    auto& verts = out.mesh.vertices;
    std::vector<int> index(static_cast<std::size_t>(cols * rows), -1);
    const auto at = [&](int i, int r) -> int& { return index[static_cast<std::size_t>(i * rows + r)]; };

    for (int i = 0; i <= n_s; ++i) {
        const bool end_col = (i == 0 || i == n_s);
        const double s = (i == n_s) ? map.length : map.length * i / n_s;
        double z = map.zeta(s);
        if (end_col && map.pinned_ends)
            z = 0.0;
        for (int r = 0; r <= n_v; ++r) {
            if (end_col && map.pinned_ends && r > n_low) {
                at(i, r) = at(i, n_low);
                continue;
            }
            double v;
            if (r < n_low)
                v = (z - map.b) * (1.0 - static_cast<double>(r) / n_low);
            else if (r == n_low)
                v = 0.0;
            else
                v = z * static_cast<double>(r - n_low) / n_up;
            const Vec3 p = map.point(s, v);
            if (!p.allFinite())
                throw EvaluationFailure("quarter map is not finite at (" + std::to_string(s) + ", " +
                                        std::to_string(v) + ")");
            at(i, r) = static_cast<int>(verts.size());
            verts.push_back(p);
        }
    }

    auto& tris = out.mesh.triangles;
    const auto emit = [&tris](int a, int b, int c) {
        if (a == b || b == c || a == c)
            return;
        // (a, b, c) is counter-clockwise in (s, v); store it reversed for outward normals
        tris.push_back({a, c, b});
    };
    for (int i = 0; i < n_s; ++i) {
        const bool left = 2 * i + 1 < n_s;
        for (int r = 0; r < n_v; ++r) {
            const int a = at(i, r), b = at(i + 1, r), c = at(i + 1, r + 1), d = at(i, r + 1);
            if (left) {
                emit(a, b, c);
                emit(a, c, d);
            } else {
                emit(a, b, d);
                emit(b, c, d);
            }
        }
    }

    for (int i = 0; i <= n_s; ++i) {
        out.vertical_end.push_back(at(i, 0));
        out.crease.push_back(at(i, n_low));
        const bool end_col = (i == 0 || i == n_s);
        if (!(end_col && map.pinned_ends))
            out.horizontal_end.push_back(at(i, n_v));
    }
    const int top = map.pinned_ends ? n_low : n_v;
    for (int r = 0; r <= top; ++r) {
        out.start_column.push_back(at(0, r));
        out.end_column.push_back(at(n_s, r));
    }
    return out;
}

bool AssemblyResult::all_welded() const { return unwelded() == 0; }

std::size_t AssemblyResult::unwelded() const {
    return std::accumulate(seams.begin(), seams.end(), std::size_t{0},
                           [](std::size_t acc, const SeamTally& t) { return acc + t.unwelded; });
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

AssemblyResult assemble_reflected(const QuarterDomainMap& map, int n_s, int n_v, double weld_rel) {
    const QuarterMesh quarter = sample_and_triangulate(map, n_s, n_v);
    const int nv = static_cast<int>(quarter.mesh.vertices.size());
    const double b = map.b;

    // pieces: 0 = P, 1 = rho_V P, 2 = rho_H P, 3 = rho_H rho_V P
    std::vector<Vec3> all;
    all.reserve(static_cast<std::size_t>(4 * nv));
    for (int piece = 0; piece < 4; ++piece) {
        for (const auto& p : quarter.mesh.vertices) {
            Vec3 q = p;
            if (piece == 1 || piece == 3)
                q = reflect_vertical(q, b);
            if (piece == 2 || piece == 3)
                q = reflect_horizontal(q);
            all.push_back(q);
        }
    }
    TriMesh probe;
    probe.vertices = all;
    const double tol = weld_rel * probe.diagonal();

    UnionFind uf(all.size());
    std::vector<std::pair<int, int>> seam_pairs;
    AssemblyResult result;

    const auto weld_list = [&](SeamTally& tally, const std::vector<int>& list, int pa, int pb) {
        int prev_a = -1;
        bool prev_ok = false;
        for (int k : list) {
            const int ga = pa * nv + k, gb = pb * nv + k;
            const bool ok = (all[ga] - all[gb]).norm() <= tol;
            if (ok) {
                uf.unite(ga, gb);
                ++tally.welded;
                if (prev_ok)
                    seam_pairs.emplace_back(prev_a, ga);
            } else {
                ++tally.unwelded;
            }
            prev_a = ga;
            prev_ok = ok;
        }
    };

    SeamTally vertical{"vertical_end"}, horizontal{"horizontal_end"}, ends{"crease_ends"};
    for (const auto& [pa, pb] : {std::pair{0, 1}, std::pair{2, 3}})
        weld_list(vertical, quarter.vertical_end, pa, pb);
    for (const auto& [pa, pb] : {std::pair{0, 2}, std::pair{1, 3}}) {
        weld_list(horizontal, quarter.horizontal_end, pa, pb);
        weld_list(ends, quarter.start_column, pa, pb);
        weld_list(ends, quarter.end_column, pa, pb);
    }
    result.seams = {vertical, horizontal, ends};

    std::vector<int> remap(all.size(), -1);
    auto& mesh = result.mesh;
    for (std::size_t g = 0; g < all.size(); ++g) {
        const int root = uf.find(static_cast<int>(g));
        if (remap[root] < 0) {
            remap[root] = static_cast<int>(mesh.vertices.size());
            mesh.vertices.push_back(all[root]);
        }
        remap[g] = remap[root];
    }
    for (int piece = 0; piece < 4; ++piece) {
        const bool flip = (piece == 1 || piece == 2);
        for (const auto& t : quarter.mesh.triangles) {
            std::array<int, 3> m{remap[piece * nv + t[0]], remap[piece * nv + t[1]], remap[piece * nv + t[2]]};
            if (flip)
                std::swap(m[1], m[2]);
            if (m[0] == m[1] || m[1] == m[2] || m[0] == m[2])
                continue;
            mesh.triangles.push_back(m);
        }
    }
    for (const auto& [a, b2] : seam_pairs) {
        const int x = remap[a], y = remap[b2];
        if (x != y)
            mesh.seam_edges.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(mesh.seam_edges.begin(), mesh.seam_edges.end());
    mesh.seam_edges.erase(std::unique(mesh.seam_edges.begin(), mesh.seam_edges.end()), mesh.seam_edges.end());
    return result;
}

} // namespace creasefold
