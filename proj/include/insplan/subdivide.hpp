#pragma once

#include <vector>

#include "insplan/bezier.hpp"
#include "insplan/occupancy.hpp"
#include "insplan/smoothing.hpp"
#include "insplan/snap.hpp"

namespace insplan {

struct SubdivisionResult {
    CompositeBezier curve;
    std::vector<Vec3> nodes;                     // node list after splitting
    std::vector<std::vector<int>> node_pois;     // per node: observed POIs
    int rounds = 0;                              // splitting rounds performed
};

// Interpolate + optimize over the polyline's points, then verify the curve by
// sampling at cell_size/2 spacing. Every span owning a colliding sample is
// split at its midpoint (midpoints of collision-free spans are free by
// construction) and the curve is rebuilt; after max_rounds the worst offender
// raises SubdivisionError.
SubdivisionResult adaptive_subdivide(const AnnotatedPolyline& poly,
                                     const OccupancyGrid& grid, int degree, double speed,
                                     double lambda, int max_rounds);

}  // namespace insplan
