// Loopback saliency server used by the remote-oracle tests. Serves
// POST /assess on 127.0.0.1, prints "PORT <n>" once bound so a parent process
// can connect, and exits on POST /quit.
//
// Modes:
//   mirror        re-runs the geometric assessment against --scene, so a
//                 remote-oracle plan reproduces the geometric one
//   bad-saliency  always answers saliency 1.7 (out of range)
//   always        always answers visible, saliency 1.0, relation_ok

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "insplan/config.hpp"
#include "insplan/errors.hpp"
#include "insplan/occupancy.hpp"
#include "insplan/oracle.hpp"
#include "insplan/scene.hpp"
#include "insplan/task.hpp"

// resolv.h (dragged in by httplib) defines a `_res` macro that corrupts
// Eigen's product kernels, so this include must come after the planner
// headers above.
#include <httplib.h>

namespace {

insplan::Vec3 vec_from(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw insplan::InputError("expected a 3-element array");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

int run(int argc, char** argv) {
    CLI::App app{"oracle_stub: loopback saliency server for planner tests"};
    std::string mode = "mirror", scene_path, config_path;
    int port = 0;
    app.add_option("--mode", mode, "mirror, bad-saliency, or always")
        ->check(CLI::IsMember({"mirror", "bad-saliency", "always"}));
    app.add_option("--scene", scene_path, "Scene file (required for mirror mode)");
    app.add_option("--config", config_path, "Planner config to mirror grid/oracle settings");
    app.add_option("--port", port, "Listening port (0 picks a free one)");
    CLI11_PARSE(app, argc, argv);

    insplan::PlannerConfig cfg;
    if (!config_path.empty()) cfg = insplan::load_config(config_path);

    // Mirror mode rebuilds the same occupancy grid the planner uses. The wire
    // Poi carries no front_axis or visible_range, so the defaults are
    // re-derived here exactly as a task file would fill them in: +X and half
    // the scene bbox diagonal.
    std::optional<insplan::OccupancyGrid> grid;
    double default_range = 0.0;
    if (mode == "mirror") {
        if (scene_path.empty()) throw insplan::InputError("mirror mode needs --scene");
        const auto format = insplan::scene_format_from_extension(scene_path);
        if (!format) throw insplan::InputError("unrecognized scene extension on " + scene_path);
        const insplan::Scene scene = insplan::load_scene(scene_path, *format);
        const double diag = scene.bbox.diagonal();
        grid.emplace(insplan::build_occupancy(scene, cfg.grid.cell_fraction * diag,
                                              cfg.grid.robot_radius));
        default_range = 0.5 * diag;
    }

    httplib::Server server;
    server.Post("/assess", [&](const httplib::Request& req, httplib::Response& res) {
        nlohmann::json out;
        if (mode == "bad-saliency") {
            out = {{"visible", true}, {"saliency", 1.7}, {"relation_ok", true}};
        } else if (mode == "always") {
            out = {{"visible", true}, {"saliency", 1.0}, {"relation_ok", true}};
        } else {
            try {
                const auto body = nlohmann::json::parse(req.body);
                insplan::Poi poi;
                poi.name = body.at("poi").at("name").get<std::string>();
                poi.relation = insplan::relation_from_string(
                    body.at("poi").at("relation").get<std::string>());
                poi.aabb.min = vec_from(body.at("poi").at("aabb").at("min"));
                poi.aabb.max = vec_from(body.at("poi").at("aabb").at("max"));
                poi.visible_range = default_range;
                const insplan::Vec3 pos = vec_from(body.at("position"));
                const auto verdict =
                    insplan::assess_geometric(pos, poi, *grid, cfg.oracle.omega_ref);
                out = {{"visible", verdict.visible},
                       {"saliency", verdict.saliency},
                       {"relation_ok", verdict.relation_ok}};
            } catch (const std::exception& e) {
                res.status = 400;
                res.set_content(std::string("bad request: ") + e.what(), "text/plain");
                return;
            }
        }
        res.set_content(out.dump(), "application/json");
    });
    server.Post("/quit", [&](const httplib::Request&, httplib::Response& res) {
        res.set_content("bye", "text/plain");
        server.stop();
    });

    if (port == 0) {
        port = server.bind_to_any_port("127.0.0.1");
        if (port < 0) throw insplan::TransportError("failed to bind a loopback port");
    } else if (!server.bind_to_port("127.0.0.1", port)) {
        throw insplan::TransportError("failed to bind 127.0.0.1:" + std::to_string(port));
    }
    std::cout << "PORT " << port << "\n" << std::flush;
    server.listen_after_bind();
    return 0;
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
