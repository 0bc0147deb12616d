#pragma once

#include <functional>
#include <vector>

#include "insplan/geometry.hpp"
#include "insplan/occupancy.hpp"
#include "insplan/oracle.hpp"
#include "insplan/task.hpp"

namespace insplan {

struct AnnotatedPolyline {
    std::vector<Vec3> points;
    // POIs observed at each point; empty for connectors. Annotated points are
    // waypoints and must keep their POIs salient through every move.
    std::vector<std::vector<int>> waypoint_pois;

    bool is_waypoint(std::size_t i) const { return !waypoint_pois[i].empty(); }
    double length() const;
};

// Greedy forward shortcutting: from each kept point, bypass the longest run
// of non-waypoint interior points whose chord is collision-free. Waypoints
// and endpoints always survive.
AnnotatedPolyline simplify(const AnnotatedPolyline& poly, const OccupancyGrid& grid);

// One accepted move per point and pass: pull the point toward the midpoint of
// its neighbors, v(α) = α·(prev+next)/2 + (1−α)·v, starting at α = 1 and
// halving on rejection until α < alpha_min. A move is accepted when both new
// segments are collision-free and, for waypoints, every annotated POI stays
// salient. Points are visited in descending turning-angle order, recomputed
// each pass; passes stop when no point moves farther than epsilon.
struct SmoothTraceEntry {
    int pass = 0;
    int point = 0;
    double alpha = 0.0;   // accepted α, 0 when every probe was rejected
    double length = 0.0;  // polyline length after the attempt
};
using SmoothTrace = std::function<void(const SmoothTraceEntry&)>;

AnnotatedPolyline smooth(const AnnotatedPolyline& poly, const TaskSpec& task,
                         SaliencyOracle& oracle, const OccupancyGrid& grid,
                         double threshold, double alpha_min, double epsilon,
                         int max_passes = 1000, const SmoothTrace& trace = nullptr);

}  // namespace insplan
