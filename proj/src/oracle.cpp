#include "insplan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "insplan/errors.hpp"

namespace insplan {

bool relation_satisfied(const Vec3& p, const Poi& poi) {
    const Aabb& box = poi.aabb;
    switch (poi.relation) {
        case SpatialRelation::inside:
            return box.contains(p);
        case SpatialRelation::over:
            return p.z() > box.max.z() && p.x() >= box.min.x() && p.x() <= box.max.x() &&
                   p.y() >= box.min.y() && p.y() <= box.max.y();
        case SpatialRelation::in_front: {
            const Vec3 c = box.centroid();
            return (p - c).dot(poi.front_axis) > 0.0 && !box.contains(p) &&
                   (p - c).norm() <= poi.visible_range;
        }
        case SpatialRelation::around:
            return !box.contains(p) && (p - box.centroid()).norm() <= poi.visible_range;
        case SpatialRelation::arbitrary:
            return true;
    }
    return false;
}

namespace {

// Van Oosterom & Strackee: solid angle of triangle (a,b,c) seen from p,
// unsigned.
double triangle_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p) {
    const Vec3 r1 = a - p, r2 = b - p, r3 = c - p;
    const double l1 = r1.norm(), l2 = r2.norm(), l3 = r3.norm();
    const double num = std::abs(r1.dot(r2.cross(r3)));
    const double den =
        l1 * l2 * l3 + r1.dot(r2) * l3 + r1.dot(r3) * l2 + r2.dot(r3) * l1;
    return std::abs(2.0 * std::atan2(num, den));
}

}  // namespace

double box_solid_angle(const Aabb& box, const Vec3& p) {
    const bool interior = p.x() > box.min.x() && p.x() < box.max.x() &&
                          p.y() > box.min.y() && p.y() < box.max.y() &&
                          p.z() > box.min.z() && p.z() < box.max.z();
    if (interior) return 4.0 * std::numbers::pi;

    // Corner bit layout: bit0 = x, bit1 = y, bit2 = z (0 = min, 1 = max).
    // Each face as 4 corner indices in CCW order seen from outside, paired
    // with the axis/side that makes it visible.
    struct Face {
        int c[4];
        int axis;
        int side;  // 0: visible when p[axis] < min, 1: visible when p[axis] > max
    };
    static const Face faces[6] = {
        {{0, 4, 6, 2}, 0, 0}, {{1, 3, 7, 5}, 0, 1},
        {{0, 1, 5, 4}, 1, 0}, {{2, 6, 7, 3}, 1, 1},
        {{0, 2, 3, 1}, 2, 0}, {{4, 5, 7, 6}, 2, 1},
    };

    double omega = 0.0;
    for (const Face& f : faces) {
        const bool visible = f.side == 0 ? p[f.axis] < box.min[f.axis]
                                         : p[f.axis] > box.max[f.axis];
        if (!visible) continue;
        const Vec3 v0 = box.corner(f.c[0]), v1 = box.corner(f.c[1]),
                   v2 = box.corner(f.c[2]), v3 = box.corner(f.c[3]);
        omega += triangle_solid_angle(v0, v1, v2, p);
        omega += triangle_solid_angle(v0, v2, v3, p);
    }
    return omega;
}

SaliencyVerdict assess_geometric(const Vec3& node_pos, const Poi& poi,
                                 const OccupancyGrid& grid, double omega_ref) {
    SaliencyVerdict v;
    int clear = 0;
    const Vec3 targets[9] = {
        poi.aabb.centroid(),    poi.aabb.corner(0), poi.aabb.corner(1),
        poi.aabb.corner(2),     poi.aabb.corner(3), poi.aabb.corner(4),
        poi.aabb.corner(5),     poi.aabb.corner(6), poi.aabb.corner(7),
    };
    for (const Vec3& t : targets) {
        if (!raycast_blocked(grid, node_pos, t)) ++clear;
    }
    v.visible = clear >= 5;
    v.saliency =
        v.visible ? std::clamp(box_solid_angle(poi.aabb, node_pos) / omega_ref, 0.0, 1.0)
                  : 0.0;
    v.relation_ok = relation_satisfied(node_pos, poi);
    return v;
}

Vec3 focus_target(const Poi& poi) { return poi.aabb.centroid(); }

ValidSets compute_valid_sets(const PrmGraph& prm, const TaskSpec& task,
                             SaliencyOracle& oracle, double threshold) {
    ValidSets out;
    out.graph = prm;
    out.valid.assign(task.total(), {});

    const int n_original = static_cast<int>(prm.nodes.size());
    for (int v = 0; v < n_original; ++v) {
        const Vec3 pos = prm.nodes[v].position;
        bool owner_assigned = false;
        for (int i = 0; i < task.total(); ++i) {
            if (!is_salient(oracle.assess(pos, task.poi(i)), threshold)) continue;
            if (!owner_assigned) {
                out.graph.nodes[v].poi_id = i;
                out.valid[i].push_back(v);
                owner_assigned = true;
            } else {
                const int clone = out.graph.add_node(pos);
                out.graph.nodes[clone].clone_of = v;
                out.graph.nodes[clone].poi_id = i;
                out.graph.edges.push_back({v, clone, 0.0});
                out.valid[i].push_back(clone);
            }
        }
    }

    for (int i = 0; i < task.total(); ++i) {
        if (out.valid[i].empty()) throw CoverageError(task.poi(i).name);
    }
    return out;
}

}  // namespace insplan
