#pragma once

#include <optional>
#include <string>
#include <vector>

#include "insplan/bezier.hpp"
#include "insplan/config.hpp"
#include "insplan/metrics.hpp"
#include "insplan/occupancy.hpp"
#include "insplan/oracle.hpp"
#include "insplan/orientation.hpp"
#include "insplan/prm.hpp"
#include "insplan/routing.hpp"
#include "insplan/scene.hpp"
#include "insplan/smoothing.hpp"
#include "insplan/task.hpp"

namespace insplan {

// Everything a planning run produces, for callers that want to inspect
// intermediate stages (the CLI writes the serialized artifacts instead).
struct PlanResult {
    Scene scene;
    OccupancyGrid grid{Vec3::Zero(), 1.0, {1, 1, 1}};
    TaskSpec task;
    ValidSets valid;
    VisitationPlan plan;
    DistanceClosure closure;
    AnnotatedPolyline routed;    // PRM-restricted polyline straight from the solver
    AnnotatedPolyline polyline;  // after simplify + smooth (== routed when disabled)
    CompositeBezier curve;
    OrientationProfile profile;
    TrajectoryMetrics metrics;
    int subdivision_rounds = 0;
};

// Full run. When out_dir is set, stage artifacts are written eagerly as they
// appear: resolved_config.json, prm.json, plan.json, polyline.ply,
// trajectory.json, metrics.json.
PlanResult run_plan(const std::string& scene_path, const std::string& task_path,
                    const PlannerConfig& config,
                    const std::optional<std::string>& out_dir);

// Same pipeline over pre-loaded inputs (the test harness entry point).
PlanResult run_plan_loaded(const Scene& scene, const TaskSpec& task,
                           const PlannerConfig& config,
                           const std::optional<std::string>& out_dir = std::nullopt,
                           SaliencyOracle* oracle_override = nullptr);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    std::string to_json() const;
};

// Re-checks a written trajectory independently: collision-freedom at half a
// cell, C0/C1/C2 joint continuity, ordered-POI passage times, and saliency at
// each POI's nearest-approach joint (geometric oracle).
ValidationReport run_validate(const std::string& traj_path, const std::string& scene_path,
                              const std::string& task_path, const PlannerConfig& config);

// Re-samples a written trajectory into csv/ply, or re-emits canonical json.
void run_export(const std::string& traj_path, const std::string& format, double rate_hz,
                const std::string& out_path);

}  // namespace insplan
