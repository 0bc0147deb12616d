#include "insplan/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "insplan/errors.hpp"

namespace insplan {

double AnnotatedPolyline::length() const {
    double len = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        len += (points[i] - points[i - 1]).norm();
    }
    return len;
}

AnnotatedPolyline simplify(const AnnotatedPolyline& poly, const OccupancyGrid& grid) {
    const std::size_t n = poly.points.size();
    if (n < 2) throw InputError("polyline needs at least 2 points");

    AnnotatedPolyline out;
    std::size_t i = 0;
    while (i < n - 1) {
        out.points.push_back(poly.points[i]);
        out.waypoint_pois.push_back(poly.waypoint_pois[i]);
        // Farthest j whose interior points are all connectors and whose
        // bypass chord stays free.
        std::size_t limit = i + 1;
        while (limit < n - 1 && !poly.is_waypoint(limit)) ++limit;
        std::size_t next = i + 1;
        for (std::size_t j = limit; j > i + 1; --j) {
            if (segment_free(grid, poly.points[i], poly.points[j])) {
                next = j;
                break;
            }
        }
        i = next;
    }
    out.points.push_back(poly.points[n - 1]);
    out.waypoint_pois.push_back(poly.waypoint_pois[n - 1]);
    return out;
}

namespace {

// Deviation from straight-through at interior point i: π − angle(prev-v-next).
double turning_angle(const AnnotatedPolyline& poly, std::size_t i) {
    const Vec3 a = poly.points[i - 1] - poly.points[i];
    const Vec3 b = poly.points[i + 1] - poly.points[i];
    const double na = a.norm(), nb = b.norm();
    if (na < 1e-12 || nb < 1e-12) return 0.0;
    const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
    return std::numbers::pi - std::acos(c);
}

}  // namespace

AnnotatedPolyline smooth(const AnnotatedPolyline& poly, const TaskSpec& task,
                         SaliencyOracle& oracle, const OccupancyGrid& grid,
                         double threshold, double alpha_min, double epsilon,
                         int max_passes, const SmoothTrace& trace) {
    if (!(alpha_min > 0.0 && alpha_min <= 1.0)) {
        throw InputError("alpha_min must lie in (0, 1]");
    }
    AnnotatedPolyline cur = poly;
    const std::size_t n = cur.points.size();
    if (n < 3) return cur;

    for (int pass = 1; pass <= max_passes; ++pass) {
        // Most curved first, index ascending under exact angle ties.
        std::vector<std::size_t> index(n - 2);
        for (std::size_t k = 0; k < index.size(); ++k) index[k] = k + 1;
        std::vector<double> angle(n);
        for (std::size_t i = 1; i + 1 < n; ++i) angle[i] = turning_angle(cur, i);
        std::stable_sort(index.begin(), index.end(),
                         [&](std::size_t a, std::size_t b) { return angle[a] > angle[b]; });

        double max_move = 0.0;
        for (const std::size_t i : index) {
            const Vec3 v = cur.points[i];
            const Vec3 mid = 0.5 * (cur.points[i - 1] + cur.points[i + 1]);
            double accepted = 0.0;
            for (double alpha = 1.0; alpha >= alpha_min; alpha *= 0.5) {
                const Vec3 cand = alpha * mid + (1.0 - alpha) * v;
                // Keep consecutive points distinct (spike tips collapse onto a
                // coincident neighbor pair at α = 1).
                if ((cand - cur.points[i - 1]).norm() <= 1e-9 ||
                    (cand - cur.points[i + 1]).norm() <= 1e-9) {
                    continue;
                }
                if (!segment_free(grid, cur.points[i - 1], cand) ||
                    !segment_free(grid, cand, cur.points[i + 1])) {
                    continue;
                }
                bool salient = true;
                for (const int poi : cur.waypoint_pois[i]) {
                    if (!is_salient(oracle.assess(cand, task.poi(poi)), threshold)) {
                        salient = false;
                        break;
                    }
                }
                if (!salient) continue;
                cur.points[i] = cand;
                accepted = alpha;
                max_move = std::max(max_move, (cand - v).norm());
                break;
            }
            if (trace) trace({pass, static_cast<int>(i), accepted, cur.length()});
        }
        if (max_move <= epsilon) break;
    }
    return cur;
}

}  // namespace insplan
