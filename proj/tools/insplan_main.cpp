#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "insplan/config.hpp"
#include "insplan/errors.hpp"
#include "insplan/pipeline.hpp"

namespace {

// Config precedence, lowest to highest: built-in defaults, --config file,
// INSPLAN_* environment, explicit CLI flags (--seed last of all).
insplan::PlannerConfig resolve_config(const std::string& config_path) {
    insplan::PlannerConfig cfg;
    if (!config_path.empty()) cfg = insplan::load_config(config_path);
    insplan::apply_env_overrides(cfg);
    return cfg;
}

int run(int argc, char** argv) {
    CLI::App app{"insplan: saliency-guided inspection trajectory planner"};
    app.require_subcommand(1);

    std::string scene_path, task_path, config_path, out_dir;
    std::string oracle_mode, oracle_url;
    std::uint64_t seed = 0;

    auto* plan = app.add_subcommand("plan", "Plan a trajectory and write all artifacts");
    plan->add_option("--scene", scene_path, "Scene file (.obj, .ply, or .xyz)")->required();
    plan->add_option("--task", task_path, "Task file (JSON)")->required();
    plan->add_option("--config", config_path, "Planner config (JSON; defaults when omitted)");
    plan->add_option("--oracle", oracle_mode, "Saliency oracle")
        ->check(CLI::IsMember({"geometric", "remote"}));
    plan->add_option("--oracle-url", oracle_url, "Remote oracle base URL (http://host:port)");
    auto* seed_opt = plan->add_option("--seed", seed, "RNG seed (overrides config and env)");
    plan->add_option("--out", out_dir, "Output directory for artifacts")->required();

    std::string traj_path;
    auto* validate = app.add_subcommand("validate", "Re-check a written trajectory");
    validate->add_option("--traj", traj_path, "trajectory.json to check")->required();
    validate->add_option("--scene", scene_path, "Scene file")->required();
    validate->add_option("--task", task_path, "Task file")->required();
    validate->add_option("--config", config_path, "Planner config (JSON)");

    std::string format = "csv", out_path;
    double rate_hz = 10.0;
    auto* exp = app.add_subcommand("export", "Resample a trajectory to csv/ply/json");
    exp->add_option("--traj", traj_path, "trajectory.json to export")->required();
    exp->add_option("--format", format, "csv, ply, or json")->required();
    exp->add_option("--rate", rate_hz, "Sampling rate in Hz (csv)");
    exp->add_option("--out", out_path, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? insplan::exit_code::ok : insplan::exit_code::input;
    }

    if (plan->parsed()) {
        insplan::PlannerConfig cfg = resolve_config(config_path);
        if (!oracle_mode.empty()) cfg.oracle.mode = oracle_mode;
        if (!oracle_url.empty()) cfg.oracle.url = oracle_url;
        if (seed_opt->count() > 0) cfg.seed = seed;
        insplan::validate_config(cfg);

        const auto res = insplan::run_plan(scene_path, task_path, cfg, out_dir);
        std::cout << "wrote " << out_dir
                  << "/{resolved_config,prm,plan,trajectory,metrics}.json and polyline.ply\n"
                  << "steps=" << res.metrics.steps << " distance=" << res.metrics.distance
                  << " mean_curvature=" << res.metrics.mean_curvature
                  << " jerk=" << res.metrics.jerk << "\n";
        return insplan::exit_code::ok;
    }

    if (validate->parsed()) {
        insplan::PlannerConfig cfg = resolve_config(config_path);
        insplan::validate_config(cfg);
        const auto report = insplan::run_validate(traj_path, scene_path, task_path, cfg);
        std::cout << report.to_json();
        return report.all_pass() ? insplan::exit_code::ok : insplan::exit_code::internal;
    }

    insplan::run_export(traj_path, format, rate_hz, out_path);
    std::cout << "wrote " << out_path << "\n";
    return insplan::exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return insplan::exit_code_for(e);
    }
}
