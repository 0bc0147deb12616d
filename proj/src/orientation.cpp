#include "insplan/orientation.hpp"

#include <algorithm>
#include <cmath>

#include "insplan/errors.hpp"
#include "insplan/oracle.hpp"

namespace insplan {

Vec3 spherical_mean(const std::vector<Vec3>& dirs, const std::vector<double>& weights) {
    if (dirs.empty() || dirs.size() != weights.size()) {
        throw InputError("spherical mean needs matching direction/weight lists");
    }
    Vec3 blend = Vec3::Zero();
    for (std::size_t i = 0; i < dirs.size(); ++i) blend += weights[i] * dirs[i];
    if (blend.norm() < 1e-6) {
        throw OrientationError("direction blend degenerates (antipodal directions)");
    }
    Vec3 m = blend.normalized();

    for (int iter = 0; iter < 10; ++iter) {
        // Tangent-space average of the log maps, then exponential update.
        Vec3 u = Vec3::Zero();
        double wsum = 0.0;
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const double c = std::clamp(m.dot(dirs[i]), -1.0, 1.0);
            const double ang = std::acos(c);
            wsum += weights[i];
            if (ang < 1e-14) continue;
            const Vec3 tangent = dirs[i] - c * m;
            const double tn = tangent.norm();
            if (tn < 1e-14) continue;  // antipodal to m: no defined direction
            u += weights[i] * (ang / tn) * tangent;
        }
        u /= wsum;
        const double step = u.norm();
        if (step < 1e-15) break;
        m = std::cos(step) * m + std::sin(step) * (u / step);
        m.normalize();
    }
    return m;
}

Vec3 eval_orientation(const OrientationProfile& profile, const CompositeBezier& curve,
                      double t) {
    const auto [k, s] = curve.locate(t);
    return spherical_mean({profile.node_directions[k], profile.node_directions[k + 1]},
                          {1.0 - s, s});
}

OrientationProfile refocus_directions(const std::vector<Vec3>& nodes,
                                      const std::vector<std::vector<int>>& node_pois,
                                      const TaskSpec& task) {
    const int n = static_cast<int>(nodes.size());
    if (n == 0 || node_pois.size() != nodes.size()) {
        throw InputError("node/annotation lists must align");
    }

    OrientationProfile profile;
    profile.node_directions.assign(n, Vec3::Zero());
    std::vector<int> waypoints;
    for (int i = 0; i < n; ++i) {
        if (node_pois[i].empty()) continue;
        std::vector<Vec3> dirs;
        for (const int poi : node_pois[i]) {
            const Vec3 to = focus_target(task.poi(poi)) - nodes[i];
            if (to.norm() < 1e-9) {
                throw OrientationError("trajectory node coincides with the focus target of \"" +
                                       task.poi(poi).name + "\"");
            }
            dirs.push_back(to.normalized());
        }
        profile.node_directions[i] =
            dirs.size() == 1
                ? dirs[0]
                : spherical_mean(dirs, std::vector<double>(dirs.size(), 1.0 / dirs.size()));
        waypoints.push_back(i);
    }
    if (waypoints.empty()) {
        throw InputError("polyline carries no waypoints to focus on");
    }

    // Cumulative chord distance along the node sequence.
    std::vector<double> arc(n, 0.0);
    for (int i = 1; i < n; ++i) arc[i] = arc[i - 1] + (nodes[i] - nodes[i - 1]).norm();

    for (int i = 0; i < n; ++i) {
        if (!node_pois[i].empty()) continue;
        const auto after = std::upper_bound(waypoints.begin(), waypoints.end(), i);
        if (after == waypoints.begin()) {
            profile.node_directions[i] = profile.node_directions[waypoints.front()];
            continue;
        }
        if (after == waypoints.end()) {
            profile.node_directions[i] = profile.node_directions[waypoints.back()];
            continue;
        }
        const int prev = *(after - 1), next = *after;
        const double dp = std::max(arc[i] - arc[prev], 1e-12);
        const double dn = std::max(arc[next] - arc[i], 1e-12);
        const double wp = 1.0 / dp, wn = 1.0 / dn;
        profile.node_directions[i] =
            spherical_mean({profile.node_directions[prev], profile.node_directions[next]},
                           {wp / (wp + wn), wn / (wp + wn)});
    }
    return profile;
}

}  // namespace insplan
