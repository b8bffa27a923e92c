#pragma once

#include "creasefold/geometry.hpp"
#include "creasefold/mesh.hpp"

#include <array>
#include <utility>
#include <vector>

namespace creasefold {

/// True when two triangles cross transversally along a segment longer than
/// contact_tol. Coplanar overlap and contact at a point or along a shared
/// boundary do not count.
bool triangles_cross(const std::array<Vec3, 3>& a, const std::array<Vec3, 3>& b, double contact_tol);

/// Bounding volume hierarchy over the triangles of a mesh.
class TriangleBvh {
public:
    explicit TriangleBvh(const TriMesh& mesh);

    /// Calls visit(i, j), i < j, for every pair whose boxes overlap after
    /// inflation by pad.
    template <typename Visit>
    void for_each_candidate_pair(double pad, Visit&& visit) const {
        if (!nodes_.empty())
            pairs(0, 0, pad, visit);
    }

private:
    struct Node {
        Eigen::AlignedBox3d box;
        int left = -1, right = -1;  // children; -1 for leaves
        int first = 0, count = 0;   // leaf range in order_
    };

    int build(int first, int count, const std::vector<Eigen::AlignedBox3d>& boxes,
              const std::vector<Vec3>& centers);

    static bool overlap(const Eigen::AlignedBox3d& a, const Eigen::AlignedBox3d& b, double pad);

    template <typename Visit>
    void pairs(int a, int b, double pad, Visit& visit) const {
        const Node& na = nodes_[a];
        const Node& nb = nodes_[b];
        if (!overlap(na.box, nb.box, pad))
            return;
        const bool leaf_a = na.left < 0, leaf_b = nb.left < 0;
        if (leaf_a && leaf_b) {
            for (int i = na.first; i < na.first + na.count; ++i) {
                const int j0 = (a == b) ? i + 1 : nb.first;
                for (int j = j0; j < nb.first + nb.count; ++j) {
                    const int ti = order_[i], tj = order_[j];
                    if (overlap(boxes_[ti], boxes_[tj], pad))
                        visit(std::min(ti, tj), std::max(ti, tj));
                }
            }
            return;
        }
        if (a == b) {
            pairs(na.left, na.left, pad, visit);
            pairs(na.right, na.right, pad, visit);
            pairs(na.left, na.right, pad, visit);
            return;
        }
        if (leaf_a || (!leaf_b && nb.box.volume() > na.box.volume())) {
            pairs(a, nb.left, pad, visit);
            pairs(a, nb.right, pad, visit);
        } else {
            pairs(na.left, b, pad, visit);
            pairs(na.right, b, pad, visit);
        }
    }

    std::vector<Node> nodes_;
    std::vector<int> order_;
    std::vector<Eigen::AlignedBox3d> boxes_;
};

/// Triangle pairs that cross each other, excluding pairs sharing a vertex.
/// Two sheets meeting along coincident, distinct edges count as crossing when
/// their triangle fans interleave around the edge; one pair is reported per edge.
std::vector<std::pair<int, int>> self_intersections(const TriMesh& mesh, double contact_tol);

} // namespace creasefold
