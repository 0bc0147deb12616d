#include "insplan/geometry.hpp"

#include <algorithm>
#include <array>

namespace insplan {

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 ab = b - a;
    const Vec3 ac = c - a;
    const Vec3 ap = p - a;

    const double d1 = ab.dot(ap);
    const double d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;

    const Vec3 bp = p - b;
    const double d3 = ab.dot(bp);
    const double d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return b;

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return a + v * ab;
    }

    const Vec3 cp = p - c;
    const double d5 = ab.dot(cp);
    const double d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return c;

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return a + w * ac;
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return b + w * (c - b);
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom;
    const double w = vc * denom;
    return a + ab * v + ac * w;
}

double segment_segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2) {
    // Ericson 5.1.9, closest points of two segments.
    const Vec3 d1 = q1 - p1;
    const Vec3 d2 = q2 - p2;
    const Vec3 r = p1 - p2;
    const double a = d1.squaredNorm();
    const double e = d2.squaredNorm();
    const double f = d2.dot(r);

    double s = 0.0, t = 0.0;
    constexpr double eps = 1e-15;
    if (a <= eps && e <= eps) {
        return r.norm();
    }
    if (a <= eps) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = d1.dot(r);
        if (e <= eps) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = d1.dot(d2);
            const double denom = a * e - b * b;
            if (denom > eps) {
                s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            }
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return ((p1 + d1 * s) - (p2 + d2 * t)).norm();
}

namespace {

bool axis_separates(const Vec3& axis, const Vec3& v0, const Vec3& v1, const Vec3& v2,
                    const Vec3& half) {
    const double p0 = v0.dot(axis);
    const double p1 = v1.dot(axis);
    const double p2 = v2.dot(axis);
    const double r = half.x() * std::abs(axis.x()) + half.y() * std::abs(axis.y()) +
                     half.z() * std::abs(axis.z());
    const double lo = std::min({p0, p1, p2});
    const double hi = std::max({p0, p1, p2});
    return lo > r || hi < -r;
}

}  // namespace

bool triangle_intersects_aabb(const Vec3& a, const Vec3& b, const Vec3& c, const Aabb& box) {
    // Akenine-Moller separating axis test, box centered at origin.
    const Vec3 center = box.centroid();
    const Vec3 half = 0.5 * box.extent();
    const Vec3 v0 = a - center;
    const Vec3 v1 = b - center;
    const Vec3 v2 = c - center;

    // Box face normals.
    for (int i = 0; i < 3; ++i) {
        const double lo = std::min({v0[i], v1[i], v2[i]});
        const double hi = std::max({v0[i], v1[i], v2[i]});
        if (lo > half[i] || hi < -half[i]) return false;
    }

    const std::array<Vec3, 3> edges = {v1 - v0, v2 - v1, v0 - v2};
    const std::array<Vec3, 3> axes = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
    for (const Vec3& e : edges) {
        for (const Vec3& u : axes) {
            const Vec3 axis = u.cross(e);
            if (axis.squaredNorm() < 1e-24) continue;
            if (axis_separates(axis, v0, v1, v2, half)) return false;
        }
    }

    const Vec3 n = (v1 - v0).cross(v2 - v0);
    if (n.squaredNorm() >= 1e-24 && axis_separates(n, v0, v1, v2, half)) return false;
    return true;
}

double triangle_aabb_distance(const Vec3& a, const Vec3& b, const Vec3& c, const Aabb& box) {
    if (triangle_intersects_aabb(a, b, c, box)) return 0.0;

    // Closest features of two disjoint convex sets: vertex of one against the
    // other, or edge against edge.
    double best = std::numeric_limits<double>::infinity();
    for (const Vec3& v : {a, b, c}) {
        best = std::min(best, box.distance(v));
    }
    for (int i = 0; i < 8; ++i) {
        const Vec3 w = box.corner(i);
        best = std::min(best, (w - closest_point_on_triangle(w, a, b, c)).norm());
    }

    static constexpr int box_edges[12][2] = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {1, 3},
                                             {4, 6}, {5, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    const std::array<std::pair<Vec3, Vec3>, 3> tri_edges = {
        std::pair{a, b}, std::pair{b, c}, std::pair{c, a}};
    for (const auto& [p, q] : tri_edges) {
        for (const auto& e : box_edges) {
            best = std::min(best,
                            segment_segment_distance(p, q, box.corner(e[0]), box.corner(e[1])));
        }
    }
    return best;
}

}  // namespace insplan
