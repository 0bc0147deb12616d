#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <limits>

namespace insplan {

using Vec3 = Eigen::Vector3d;

/// Axis-aligned bounding box. Empty until the first expand(); min <= max
/// componentwise once valid.
struct Aabb {
    Vec3 min = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 max = Vec3::Constant(-std::numeric_limits<double>::infinity());

    bool valid() const { return (min.array() <= max.array()).all(); }

    Vec3 centroid() const { return 0.5 * (min + max); }
    Vec3 extent() const { return max - min; }
    double diagonal() const { return (max - min).norm(); }

    bool contains(const Vec3& p) const {
        return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
    }

    void expand(const Vec3& p) {
        min = min.cwiseMin(p);
        max = max.cwiseMax(p);
    }

    void expand(const Aabb& other) {
        min = min.cwiseMin(other.min);
        max = max.cwiseMax(other.max);
    }

    Aabb inflated(double r) const {
        return {min - Vec3::Constant(r), max + Vec3::Constant(r)};
    }

    /// Closest point of the box to p.
    Vec3 clamp(const Vec3& p) const { return p.cwiseMax(min).cwiseMin(max); }

    double distance(const Vec3& p) const { return (p - clamp(p)).norm(); }

    /// Corner i in 0..7, bit 0/1/2 selecting max on x/y/z.
    Vec3 corner(int i) const {
        return {(i & 1) ? max.x() : min.x(),
                (i & 2) ? max.y() : min.y(),
                (i & 4) ? max.z() : min.z()};
    }
};

/// Closest point on triangle (a,b,c) to p. Ericson, Real-Time Collision
/// Detection, 5.1.5.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

/// Minimum distance between segments [p1,q1] and [p2,q2].
double segment_segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2);

/// Exact separating-axis triangle vs. box overlap test.
bool triangle_intersects_aabb(const Vec3& a, const Vec3& b, const Vec3& c, const Aabb& box);

/// Exact distance between a triangle and a box (0 when they overlap).
double triangle_aabb_distance(const Vec3& a, const Vec3& b, const Vec3& c, const Aabb& box);

}  // namespace insplan
