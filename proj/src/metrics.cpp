#include "insplan/metrics.hpp"

#include <cmath>

#include "insplan/errors.hpp"

namespace insplan {

namespace {

// i-th of n uniform times on [0, T]. T*i/(n-1) can land one ulp past T at the
// last index, which locate() rejects, so the endpoint is returned exactly.
double sample_time(double T, int i, int n) {
    return i == n - 1 ? T : T * i / (n - 1);
}

}  // namespace

double curvature_at(const CompositeBezier& curve, double t) {
    const Vec3 vel = eval_derivative(curve, t, 1);
    const double speed = vel.norm();
    if (speed <= 1e-9) {
        throw SingularityError("near-zero speed at t=" + std::to_string(t) +
                               "; curvature undefined");
    }
    const Vec3 acc = eval_derivative(curve, t, 2);
    return vel.cross(acc).norm() / (speed * speed * speed);
}

double mean_curvature(const CompositeBezier& curve, int samples, int* skipped) {
    if (samples < 2) throw InputError("need at least 2 samples");
    const double T = curve.total_duration();
    double sum = 0.0;
    int used = 0, skip = 0;
    for (int i = 0; i < samples; ++i) {
        const double t = sample_time(T, i, samples);
        try {
            sum += curvature_at(curve, t);
            ++used;
        } catch (const SingularityError&) {
            ++skip;
        }
    }
    if (skipped) *skipped = skip;
    if (used == 0) throw MetricError("every curvature sample was singular");
    return sum / used;
}

double integrated_jerk(const CompositeBezier& curve, int samples) {
    if (samples < 2) throw InputError("need at least 2 samples");
    bool any_cubic = false;
    for (const auto& seg : curve.segments) any_cubic |= seg.degree() >= 3;
    if (!any_cubic) return 0.0;

    const double T = curve.total_duration();
    const double h = T / (samples - 1);
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = sample_time(T, i, samples);
        const double mag = eval_derivative(curve, t, 3).norm();
        sum += (i == 0 || i == samples - 1) ? 0.5 * mag : mag;
    }
    return sum * h;
}

std::pair<int, double> steps_and_distance(const AnnotatedPolyline& poly,
                                          const CompositeBezier& curve, int samples) {
    const int steps = static_cast<int>(poly.points.size()) - 1;
    const double T = curve.total_duration();
    double dist = 0.0;
    Vec3 prev = eval_position(curve, 0.0);
    for (int i = 1; i < samples; ++i) {
        const Vec3 p = eval_position(curve, sample_time(T, i, samples));
        dist += (p - prev).norm();
        prev = p;
    }
    return {steps, dist};
}

TrajectoryMetrics compute_metrics(const AnnotatedPolyline& poly,
                                  const CompositeBezier& curve, int samples) {
    TrajectoryMetrics m;
    m.mean_curvature = mean_curvature(curve, samples, &m.skipped_samples);
    m.jerk = integrated_jerk(curve, samples);
    const auto [steps, dist] = steps_and_distance(poly, curve, samples);
    m.steps = steps;
    m.distance = dist;
    return m;
}

}  // namespace insplan
