#pragma once

#include <vector>

#include "insplan/geometry.hpp"

namespace insplan {

struct BezierSegment {
    std::vector<Vec3> controls;  // degree + 1 points
    double duration = 1.0;       // seconds

    int degree() const { return static_cast<int>(controls.size()) - 1; }
};

struct CompositeBezier {
    std::vector<BezierSegment> segments;

    double total_duration() const;
    // Maps t ∈ [0, T] to (segment index, local parameter s ∈ [0, 1]); t = T
    // lands on the last segment at s = 1. DomainError outside [0, T].
    std::pair<int, double> locate(double t) const;
};

// C(n, k) as double; exact for n ≤ 20 and far beyond.
double binomial(int n, int k);

// Σ_j B_{j,d}(s) · c_j — the Bernstein-sum evaluator.
Vec3 bernstein_eval(const std::vector<Vec3>& controls, double s);

// Repeated-lerp evaluation; the independent oracle for bernstein_eval.
Vec3 de_casteljau(const std::vector<Vec3>& controls, double s);

// Control points of d/ds of the segment's curve (degree drops by one).
std::vector<Vec3> derivative_controls(const std::vector<Vec3>& controls);

Vec3 eval_position(const CompositeBezier& curve, double t);
// k-th derivative with respect to time (local derivative scaled by
// duration^-k since s is affine in t).
Vec3 eval_derivative(const CompositeBezier& curve, double t, int k);

// One degree-d segment per consecutive node pair, controls seeded on the
// chord (uniform lerp), durations = chord length / speed so the initial curve
// traces the polyline at constant speed.
CompositeBezier interpolate_composite(const std::vector<Vec3>& nodes, int degree,
                                      double speed = 1.0);

}  // namespace insplan
