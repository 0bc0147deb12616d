#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "insplan/geometry.hpp"
#include "insplan/occupancy.hpp"

namespace insplan {

struct PrmNode {
    Vec3 position;
    std::optional<int> clone_of;  // id of the original node when this is a clone
    std::optional<int> poi_id;    // POI this node is dedicated to, once assigned
};

struct PrmEdge {
    int u = 0;
    int v = 0;
    double length = 0.0;
};

struct PrmGraph {
    std::vector<PrmNode> nodes;
    std::vector<PrmEdge> edges;

    int add_node(const Vec3& p) {
        nodes.push_back({p, std::nullopt, std::nullopt});
        return static_cast<int>(nodes.size()) - 1;
    }
    // Adjacency as (neighbor, edge length) lists, rebuilt on demand.
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;
};

// Draws n collision-free positions: a uniformly random free cell, then a
// uniform jitter inside it. Throws SamplingError when the grid has no free
// cells.
std::vector<Vec3> sample_free(const OccupancyGrid& grid, int n, std::uint64_t rng_seed);

// Greedy dart-throwing in input order: keep a point iff no previously kept
// point lies within r_min.
std::vector<Vec3> poisson_sparsify(const std::vector<Vec3>& points, double r_min);

// Connects every pair within connect_radius whose straight segment is free.
// If the result is disconnected the radius is doubled (up to 6 times) and the
// edge set rebuilt; still disconnected throws ConnectivityError naming the
// component sizes.
PrmGraph build_prm(const std::vector<Vec3>& points, const OccupancyGrid& grid,
                   double connect_radius);

}  // namespace insplan
