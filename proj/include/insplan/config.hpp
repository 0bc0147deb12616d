#pragma once

#include <cstdint>
#include <string>

namespace insplan {

// Planner knobs with their defaults. Loadable from JSON (same nesting) and
// overridable through INSPLAN_<SECTION>_<FIELD> environment variables; the
// CLI seed takes final precedence.
struct PlannerConfig {
    std::uint64_t seed = 0;

    struct Prm {
        int samples = 1000;
        double poisson_fraction = 0.10;         // of the scene bbox diagonal
        double connect_radius_fraction = 0.25;  // of the scene bbox diagonal
    } prm;

    struct Grid {
        double cell_fraction = 0.01;  // of the scene bbox diagonal
        double robot_radius = 0.0;    // meters
    } grid;

    struct Oracle {
        std::string mode = "geometric";  // or "remote"
        std::string url;
        double saliency_threshold = 0.5;
        double omega_ref = 0.2;  // steradians mapping to saliency 1.0
    } oracle;

    struct Smoothing {
        bool enabled = true;  // ablation switch: skip simplify+smooth entirely
        double alpha_min = 0.125;
        double epsilon_fraction = 1e-6;  // of the scene bbox diagonal
    } smoothing;

    struct Spline {
        int degree = 5;
        double lambda = 10.0;
        double speed = 1.0;  // m/s average
        int max_subdiv_rounds = 8;
    } spline;

    struct Metrics {
        int samples = 2000;
    } metrics;
};

// Parse from a JSON file/text; unknown keys are input errors (typo guard), as
// are invariant violations (fractions in (0,1], degree >= 1, lambda >= 0...).
PlannerConfig load_config(const std::string& path);
PlannerConfig parse_config(const std::string& json_text, const std::string& origin = "config");
// Apply INSPLAN_* environment overrides (e.g. INSPLAN_PRM_SAMPLES=500).
void apply_env_overrides(PlannerConfig& cfg);
void validate_config(const PlannerConfig& cfg);
std::string config_to_json(const PlannerConfig& cfg);

}  // namespace insplan
