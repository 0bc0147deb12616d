#pragma once

#include <vector>

#include "insplan/bezier.hpp"
#include "insplan/geometry.hpp"
#include "insplan/task.hpp"

namespace insplan {

struct OrientationProfile {
    std::vector<Vec3> node_directions;  // unit camera direction per curve joint
};

// Weighted Karcher mean on the unit sphere (≤ 10 fixed-point refinements of
// the normalized linear blend). Exactly reproduces slerp for two directions.
// OrientationError when the blend degenerates (antipodal inputs).
Vec3 spherical_mean(const std::vector<Vec3>& dirs, const std::vector<double>& weights);

// Direction at time t: spherical blend of the active segment's two joint
// directions with weights (1-s, s).
Vec3 eval_orientation(const OrientationProfile& profile, const CompositeBezier& curve,
                      double t);

// Camera directions at the (post-optimization) joints: waypoints aim at their
// POI box centroid (several POIs: equal-weight spherical mean); connectors
// blend the nearest preceding and following waypoint directions with
// inverse-path-distance weights.
OrientationProfile refocus_directions(const std::vector<Vec3>& nodes,
                                      const std::vector<std::vector<int>>& node_pois,
                                      const TaskSpec& task);

}  // namespace insplan
