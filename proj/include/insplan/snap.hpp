#pragma once

#include <vector>

#include "insplan/bezier.hpp"
#include "insplan/geometry.hpp"

namespace insplan {

// ∫₀ᵀ ‖τ⁗(t)‖² dt, summed over segments (exact Bernstein Gram quadrature).
double snap_integral(const CompositeBezier& curve);

// Full quadratic objective of minimize_snap: snap integral plus
// λ Σ ‖control − anchor‖² over all control points, anchors taken from
// `anchor` (same layout as `curve`).
double snap_objective(const CompositeBezier& curve, const CompositeBezier& anchor,
                      double lambda);

// Minimizes the snap integral plus a soft pull of every control point toward
// its seeded position, under hard constraints: trajectory endpoints pinned to
// nodes.front()/nodes.back() and C⁰/C¹/C² continuity (in time) at every
// joint. Durations are kept. Solved per axis through one KKT factorization;
// a singular system raises ConditioningError with the offending pivot.
CompositeBezier minimize_snap(const CompositeBezier& curve, const std::vector<Vec3>& nodes,
                              double lambda);

}  // namespace insplan
