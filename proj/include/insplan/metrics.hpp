#pragma once

#include "insplan/bezier.hpp"
#include "insplan/smoothing.hpp"

namespace insplan {

struct TrajectoryMetrics {
    double mean_curvature = 0.0;  // 1/m
    double jerk = 0.0;            // ∫‖τ⃛‖dt
    int steps = 0;                // polyline segment count
    double distance = 0.0;        // m
    int skipped_samples = 0;      // curvature samples with near-zero speed
};

// κ(t) = ‖τ̇ × τ̈‖ / ‖τ̇‖³ from the analytic Bézier derivatives.
// SingularityError when ‖τ̇(t)‖ ≤ 1e-9.
double curvature_at(const CompositeBezier& curve, double t);

// Arithmetic mean of curvature_at over `samples` uniform times; singular
// samples are skipped and counted (all singular: MetricError).
double mean_curvature(const CompositeBezier& curve, int samples, int* skipped = nullptr);

// Composite-trapezoid ∫₀ᵀ ‖τ⃛(t)‖ dt; identically 0 below cubic degree.
double integrated_jerk(const CompositeBezier& curve, int samples);

// steps = polyline point count - 1; distance = dense chordal arc length of
// the curve.
std::pair<int, double> steps_and_distance(const AnnotatedPolyline& poly,
                                          const CompositeBezier& curve, int samples);

TrajectoryMetrics compute_metrics(const AnnotatedPolyline& poly,
                                  const CompositeBezier& curve, int samples);

}  // namespace insplan
