#include "insplan/occupancy.hpp"

#include "insplan/errors.hpp"

#include <algorithm>
#include <cmath>

namespace insplan {

OccupancyGrid::OccupancyGrid(const Vec3& origin, double cell_size,
                             const std::array<int, 3>& dims)
    : origin_(origin), cell_size_(cell_size), dims_(dims) {
    occupied_.assign(static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2], 0);
}

std::array<int, 3> OccupancyGrid::cell_of(const Vec3& p) const {
    const Vec3 g = (p - origin_) / cell_size_;
    return {static_cast<int>(std::floor(g.x())), static_cast<int>(std::floor(g.y())),
            static_cast<int>(std::floor(g.z()))};
}

Aabb OccupancyGrid::cell_bounds(int ix, int iy, int iz) const {
    const Vec3 lo = origin_ + cell_size_ * Vec3(ix, iy, iz);
    return {lo, lo + Vec3::Constant(cell_size_)};
}

Vec3 OccupancyGrid::cell_center(int ix, int iy, int iz) const {
    return origin_ + cell_size_ * Vec3(ix + 0.5, iy + 0.5, iz + 0.5);
}

Aabb OccupancyGrid::bounds() const {
    return {origin_, origin_ + cell_size_ * Vec3(dims_[0], dims_[1], dims_[2])};
}

std::vector<std::size_t> OccupancyGrid::free_cells() const {
    std::vector<std::size_t> out;
    out.reserve(occupied_.size());
    for (std::size_t i = 0; i < occupied_.size(); ++i) {
        if (!occupied_[i]) out.push_back(i);
    }
    return out;
}

std::size_t OccupancyGrid::occupied_count() const {
    std::size_t n = 0;
    for (uint8_t v : occupied_) n += v;
    return n;
}

OccupancyGrid build_occupancy(const Scene& scene, double cell_size, double robot_radius,
                              std::size_t max_cells) {
    if (cell_size <= 0.0) throw InputError("cell_size must be positive");
    if (robot_radius < 0.0) throw InputError("robot_radius must be non-negative");

    const Aabb span = scene.bbox.inflated(robot_radius + cell_size);
    const Vec3 extent = span.extent();
    std::array<int, 3> dims;
    for (int i = 0; i < 3; ++i) {
        dims[i] = std::max(1, static_cast<int>(std::ceil(extent[i] / cell_size)));
    }
    const std::size_t total = static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
    if (total > max_cells) {
        throw ResolutionError("grid of " + std::to_string(dims[0]) + "x" +
                              std::to_string(dims[1]) + "x" + std::to_string(dims[2]) +
                              " cells exceeds the memory cap; increase cell_size");
    }

    OccupancyGrid grid(span.min, cell_size, dims);

    // Candidate cull only — the exact per-cell test below decides. Padded by
    // one cell so geometry lying exactly on a grid plane still reaches the
    // closed-boundary cells on both sides.
    auto cell_range = [&](const Aabb& box, std::array<int, 3>& lo, std::array<int, 3>& hi) {
        const auto c0 = grid.cell_of(box.min);
        const auto c1 = grid.cell_of(box.max);
        for (int i = 0; i < 3; ++i) {
            lo[i] = std::max(0, c0[i] - 1);
            hi[i] = std::min(dims[i] - 1, c1[i] + 1);
        }
    };

    if (scene.triangles) {
        for (const auto& tri : *scene.triangles) {
            const Vec3& a = scene.vertices[tri[0]];
            const Vec3& b = scene.vertices[tri[1]];
            const Vec3& c = scene.vertices[tri[2]];
            Aabb tb;
            tb.expand(a);
            tb.expand(b);
            tb.expand(c);
            std::array<int, 3> lo, hi;
            cell_range(tb.inflated(robot_radius), lo, hi);
            for (int iz = lo[2]; iz <= hi[2]; ++iz) {
                for (int iy = lo[1]; iy <= hi[1]; ++iy) {
                    for (int ix = lo[0]; ix <= hi[0]; ++ix) {
                        if (grid.occupied(ix, iy, iz)) continue;
                        const Aabb cb = grid.cell_bounds(ix, iy, iz);
                        const bool hit =
                            robot_radius == 0.0
                                ? triangle_intersects_aabb(a, b, c, cb)
                                : triangle_aabb_distance(a, b, c, cb) <= robot_radius;
                        if (hit) grid.set_occupied(ix, iy, iz);
                    }
                }
            }
        }
    } else {
        for (const Vec3& p : scene.vertices) {
            Aabb pb{p, p};
            std::array<int, 3> lo, hi;
            cell_range(pb.inflated(robot_radius), lo, hi);
            for (int iz = lo[2]; iz <= hi[2]; ++iz) {
                for (int iy = lo[1]; iy <= hi[1]; ++iy) {
                    for (int ix = lo[0]; ix <= hi[0]; ++ix) {
                        if (grid.occupied(ix, iy, iz)) continue;
                        if (grid.cell_bounds(ix, iy, iz).distance(p) <= robot_radius) {
                            grid.set_occupied(ix, iy, iz);
                        }
                    }
                }
            }
        }
    }
    return grid;
}

bool point_free(const OccupancyGrid& grid, const Vec3& p) {
    const auto c = grid.cell_of(p);
    return grid.in_bounds(c[0], c[1], c[2]) && !grid.occupied(c[0], c[1], c[2]);
}

namespace {

bool lex_less(const Vec3& a, const Vec3& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
}

}  // namespace

std::vector<std::array<int, 3>> traverse_cells(const OccupancyGrid& grid, const Vec3& a,
                                               const Vec3& b) {
    // Canonical endpoint order makes the walk, and with it segment_free and
    // raycast_blocked, symmetric in (a, b).
    Vec3 p = a, q = b;
    if (lex_less(q, p)) std::swap(p, q);

    const double cs = grid.cell_size();
    const Vec3 gp = (p - grid.origin()) / cs;
    const Vec3 gq = (q - grid.origin()) / cs;

    std::array<int, 3> cell{static_cast<int>(std::floor(gp.x())),
                            static_cast<int>(std::floor(gp.y())),
                            static_cast<int>(std::floor(gp.z()))};
    const std::array<int, 3> end{static_cast<int>(std::floor(gq.x())),
                                 static_cast<int>(std::floor(gq.y())),
                                 static_cast<int>(std::floor(gq.z()))};

    std::vector<std::array<int, 3>> out;
    out.push_back(cell);
    if (cell == end) return out;

    const Vec3 d = gq - gp;
    std::array<int, 3> step{};
    Vec3 t_max, t_delta;
    constexpr double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        if (d[i] > 0.0) {
            step[i] = 1;
            t_max[i] = (static_cast<double>(cell[i] + 1) - gp[i]) / d[i];
            t_delta[i] = 1.0 / d[i];
        } else if (d[i] < 0.0) {
            step[i] = -1;
            t_max[i] = (static_cast<double>(cell[i]) - gp[i]) / d[i];
            t_delta[i] = -1.0 / d[i];
        } else {
            step[i] = 0;
            t_max[i] = inf;
            t_delta[i] = inf;
        }
        // An axis already aligned with the end cell never steps again; this
        // keeps the walk finite under floating-point tie noise.
        if (cell[i] == end[i]) t_max[i] = inf;
    }

    long remaining = std::abs(end[0] - cell[0]) + std::abs(end[1] - cell[1]) +
                     std::abs(end[2] - cell[2]);
    while (remaining-- > 0) {
        int axis = 0;
        if (t_max[1] < t_max[axis]) axis = 1;
        if (t_max[2] < t_max[axis]) axis = 2;
        cell[axis] += step[axis];
        t_max[axis] += t_delta[axis];
        if (cell[axis] == end[axis]) t_max[axis] = inf;
        out.push_back(cell);
    }
    return out;
}

bool segment_free(const OccupancyGrid& grid, const Vec3& a, const Vec3& b) {
    for (const auto& c : traverse_cells(grid, a, b)) {
        if (!grid.in_bounds(c[0], c[1], c[2]) || grid.occupied(c[0], c[1], c[2])) {
            return false;
        }
    }
    return true;
}

bool raycast_blocked(const OccupancyGrid& grid, const Vec3& origin, const Vec3& target) {
    const auto co = grid.cell_of(origin);
    const auto ct = grid.cell_of(target);
    for (const auto& c : traverse_cells(grid, origin, target)) {
        if (c == co || c == ct) continue;
        if (grid.in_bounds(c[0], c[1], c[2]) && grid.occupied(c[0], c[1], c[2])) {
            return true;
        }
    }
    return false;
}

}  // namespace insplan
