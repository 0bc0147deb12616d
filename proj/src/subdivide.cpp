#include "insplan/subdivide.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "insplan/errors.hpp"

namespace insplan {

SubdivisionResult adaptive_subdivide(const AnnotatedPolyline& poly,
                                     const OccupancyGrid& grid, int degree, double speed,
                                     double lambda, int max_rounds) {
    if (max_rounds < 0) throw InputError("max_rounds must be non-negative");

    SubdivisionResult res;
    res.nodes = poly.points;
    res.node_pois = poly.waypoint_pois;

    const double step = grid.cell_size() * 0.5;
    for (int round = 0;; ++round) {
        res.curve = minimize_snap(interpolate_composite(res.nodes, degree, speed),
                                  res.nodes, lambda);

        // Dense collision sweep; remember every offending span.
        std::set<int> dirty;
        double first_bad_t = -1.0;
        double t0 = 0.0;
        for (std::size_t k = 0; k < res.curve.segments.size(); ++k) {
            const auto& seg = res.curve.segments[k];
            const double chord = (res.nodes[k + 1] - res.nodes[k]).norm();
            const int m = std::max(2, static_cast<int>(std::ceil(chord / step)) + 1);
            for (int i = 0; i <= m; ++i) {
                const double s = static_cast<double>(i) / m;
                if (!point_free(grid, bernstein_eval(seg.controls, s))) {
                    dirty.insert(static_cast<int>(k));
                    if (first_bad_t < 0.0) first_bad_t = t0 + s * seg.duration;
                    break;
                }
            }
            t0 += seg.duration;
        }
        if (dirty.empty()) {
            res.rounds = round;
            return res;
        }
        if (round == max_rounds) {
            throw SubdivisionError("curve still collides after " +
                                       std::to_string(max_rounds) +
                                       " subdivision rounds (sample at t=" +
                                       std::to_string(first_bad_t) + ")",
                                   first_bad_t);
        }
        // Split offending spans at their midpoints, highest index first so
        // earlier spans keep their indices.
        for (auto it = dirty.rbegin(); it != dirty.rend(); ++it) {
            const int k = *it;
            const Vec3 mid = 0.5 * (res.nodes[k] + res.nodes[k + 1]);
            res.nodes.insert(res.nodes.begin() + k + 1, mid);
            res.node_pois.insert(res.node_pois.begin() + k + 1, std::vector<int>{});
        }
    }
}

}  // namespace insplan
