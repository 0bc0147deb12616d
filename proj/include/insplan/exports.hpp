#pragma once

#include <string>

#include "insplan/bezier.hpp"
#include "insplan/metrics.hpp"
#include "insplan/orientation.hpp"
#include "insplan/prm.hpp"
#include "insplan/routing.hpp"
#include "insplan/smoothing.hpp"

namespace insplan {

// Serializers for the run artifacts. JSON numbers use the shortest
// round-trippable form, so identical values serialize identically.
std::string prm_to_json(const PrmGraph& prm);
std::string plan_to_json(const VisitationPlan& plan, const DistanceClosure& closure);
std::string trajectory_to_json(const CompositeBezier& curve,
                               const OrientationProfile& profile);
std::string metrics_to_json(const TrajectoryMetrics& m);

// Inverse of trajectory_to_json; ParseError/InputError on malformed input.
void trajectory_from_json(const std::string& text, CompositeBezier& curve,
                          OrientationProfile& profile, const std::string& origin = "trajectory");

// Sampled trajectory: "t,x,y,z,dx,dy,dz" rows at the given rate (fencepost
// inclusive: floor(T*rate)+1 rows).
std::string trajectory_to_csv(const CompositeBezier& curve,
                              const OrientationProfile& profile, double rate_hz);
// ascii PLY of trajectory samples as a vertex/edge polyline.
std::string trajectory_to_ply(const CompositeBezier& curve, double rate_hz);
// ascii PLY of the node polyline.
std::string polyline_to_ply(const AnnotatedPolyline& poly);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace insplan
