#pragma once

#include "insplan/geometry.hpp"
#include "insplan/scene.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace insplan {

/// Voxelized free/occupied map of the scene, inflated by the robot radius.
/// Immutable after build_occupancy; safe to query concurrently.
class OccupancyGrid {
public:
    OccupancyGrid(const Vec3& origin, double cell_size, const std::array<int, 3>& dims);

    const Vec3& origin() const { return origin_; }
    double cell_size() const { return cell_size_; }
    const std::array<int, 3>& dims() const { return dims_; }
    std::size_t cell_count() const { return occupied_.size(); }

    bool in_bounds(int ix, int iy, int iz) const {
        return ix >= 0 && ix < dims_[0] && iy >= 0 && iy < dims_[1] && iz >= 0 && iz < dims_[2];
    }

    std::size_t index(int ix, int iy, int iz) const {
        return static_cast<std::size_t>(ix) +
               static_cast<std::size_t>(dims_[0]) *
                   (static_cast<std::size_t>(iy) +
                    static_cast<std::size_t>(dims_[1]) * static_cast<std::size_t>(iz));
    }

    bool occupied(int ix, int iy, int iz) const { return occupied_[index(ix, iy, iz)] != 0; }
    void set_occupied(int ix, int iy, int iz) { occupied_[index(ix, iy, iz)] = 1; }

    /// Cell containing p (floor mapping; points on a boundary belong to the
    /// upper cell).
    std::array<int, 3> cell_of(const Vec3& p) const;

    Aabb cell_bounds(int ix, int iy, int iz) const;

    Vec3 cell_center(int ix, int iy, int iz) const;

    Aabb bounds() const;

    /// Indices of all free cells, in memory order.
    std::vector<std::size_t> free_cells() const;

    std::size_t occupied_count() const;

private:
    Vec3 origin_;
    double cell_size_;
    std::array<int, 3> dims_;
    std::vector<uint8_t> occupied_;
};

/// Builds the inflated grid: a cell is occupied iff any triangle (or point,
/// for point clouds) lies within robot_radius of the cell box. The grid spans
/// the scene bbox inflated by robot_radius + cell_size.
OccupancyGrid build_occupancy(const Scene& scene, double cell_size, double robot_radius,
                              std::size_t max_cells = 256u * 1024u * 1024u);

/// True iff p maps to an in-bounds, unoccupied cell. Out-of-grid is not free.
bool point_free(const OccupancyGrid& grid, const Vec3& p);

/// True iff every cell traversed by segment a-b (exact 3D DDA walk) is
/// in-bounds and unoccupied.
bool segment_free(const OccupancyGrid& grid, const Vec3& a, const Vec3& b);

/// True iff an occupied cell lies strictly between origin and target; the
/// cells containing the endpoints are excluded.
bool raycast_blocked(const OccupancyGrid& grid, const Vec3& origin, const Vec3& target);

/// All cells the segment a-b passes through, in walk order. Exposed for the
/// traversal tests.
std::vector<std::array<int, 3>> traverse_cells(const OccupancyGrid& grid, const Vec3& a,
                                               const Vec3& b);

}  // namespace insplan
