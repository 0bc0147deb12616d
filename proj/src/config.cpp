#include "insplan/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "insplan/errors.hpp"

namespace insplan {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok |= key == k;
        if (!ok) throw InputError("unknown config key \"" + where + key + "\"");
    }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j[key].get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("config key \"") + key + "\" has the wrong type");
    }
}

}  // namespace

PlannerConfig parse_config(const std::string& json_text, const std::string& origin) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin, 0, e.what());
    }
    if (!j.is_object()) throw InputError("config must be a JSON object");

    PlannerConfig cfg;
    reject_unknown(j, {"seed", "prm", "grid", "oracle", "smoothing", "spline", "metrics"}, "");
    read(j, "seed", cfg.seed);
    if (j.contains("prm")) {
        const json& s = j["prm"];
        reject_unknown(s, {"samples", "poisson_fraction", "connect_radius_fraction"}, "prm.");
        read(s, "samples", cfg.prm.samples);
        read(s, "poisson_fraction", cfg.prm.poisson_fraction);
        read(s, "connect_radius_fraction", cfg.prm.connect_radius_fraction);
    }
    if (j.contains("grid")) {
        const json& s = j["grid"];
        reject_unknown(s, {"cell_fraction", "robot_radius"}, "grid.");
        read(s, "cell_fraction", cfg.grid.cell_fraction);
        read(s, "robot_radius", cfg.grid.robot_radius);
    }
    if (j.contains("oracle")) {
        const json& s = j["oracle"];
        reject_unknown(s, {"mode", "url", "saliency_threshold", "omega_ref"}, "oracle.");
        read(s, "mode", cfg.oracle.mode);
        read(s, "url", cfg.oracle.url);
        read(s, "saliency_threshold", cfg.oracle.saliency_threshold);
        read(s, "omega_ref", cfg.oracle.omega_ref);
    }
    if (j.contains("smoothing")) {
        const json& s = j["smoothing"];
        reject_unknown(s, {"enabled", "alpha_min", "epsilon_fraction"}, "smoothing.");
        read(s, "enabled", cfg.smoothing.enabled);
        read(s, "alpha_min", cfg.smoothing.alpha_min);
        read(s, "epsilon_fraction", cfg.smoothing.epsilon_fraction);
    }
    if (j.contains("spline")) {
        const json& s = j["spline"];
        reject_unknown(s, {"degree", "lambda", "speed", "max_subdiv_rounds"}, "spline.");
        read(s, "degree", cfg.spline.degree);
        read(s, "lambda", cfg.spline.lambda);
        read(s, "speed", cfg.spline.speed);
        read(s, "max_subdiv_rounds", cfg.spline.max_subdiv_rounds);
    }
    if (j.contains("metrics")) {
        const json& s = j["metrics"];
        reject_unknown(s, {"samples"}, "metrics.");
        read(s, "samples", cfg.metrics.samples);
    }
    validate_config(cfg);
    return cfg;
}

PlannerConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

void apply_env_overrides(PlannerConfig& cfg) {
    const auto get = [](const char* name) -> const char* { return std::getenv(name); };
    const auto as_int = [](const char* name, const char* v) {
        try {
            return std::stoll(v);
        } catch (const std::exception&) {
            throw InputError(std::string(name) + " is not an integer");
        }
    };
    const auto as_double = [](const char* name, const char* v) {
        try {
            return std::stod(v);
        } catch (const std::exception&) {
            throw InputError(std::string(name) + " is not a number");
        }
    };

    if (const char* v = get("INSPLAN_SEED")) cfg.seed = as_int("INSPLAN_SEED", v);
    if (const char* v = get("INSPLAN_PRM_SAMPLES"))
        cfg.prm.samples = static_cast<int>(as_int("INSPLAN_PRM_SAMPLES", v));
    if (const char* v = get("INSPLAN_PRM_POISSON_FRACTION"))
        cfg.prm.poisson_fraction = as_double("INSPLAN_PRM_POISSON_FRACTION", v);
    if (const char* v = get("INSPLAN_PRM_CONNECT_RADIUS_FRACTION"))
        cfg.prm.connect_radius_fraction = as_double("INSPLAN_PRM_CONNECT_RADIUS_FRACTION", v);
    if (const char* v = get("INSPLAN_GRID_CELL_FRACTION"))
        cfg.grid.cell_fraction = as_double("INSPLAN_GRID_CELL_FRACTION", v);
    if (const char* v = get("INSPLAN_GRID_ROBOT_RADIUS"))
        cfg.grid.robot_radius = as_double("INSPLAN_GRID_ROBOT_RADIUS", v);
    if (const char* v = get("INSPLAN_ORACLE_MODE")) cfg.oracle.mode = v;
    if (const char* v = get("INSPLAN_ORACLE_URL")) cfg.oracle.url = v;
    if (const char* v = get("INSPLAN_ORACLE_SALIENCY_THRESHOLD"))
        cfg.oracle.saliency_threshold = as_double("INSPLAN_ORACLE_SALIENCY_THRESHOLD", v);
    if (const char* v = get("INSPLAN_ORACLE_OMEGA_REF"))
        cfg.oracle.omega_ref = as_double("INSPLAN_ORACLE_OMEGA_REF", v);
    if (const char* v = get("INSPLAN_SMOOTHING_ENABLED"))
        cfg.smoothing.enabled = std::string(v) != "0" && std::string(v) != "false";
    if (const char* v = get("INSPLAN_SMOOTHING_ALPHA_MIN"))
        cfg.smoothing.alpha_min = as_double("INSPLAN_SMOOTHING_ALPHA_MIN", v);
    if (const char* v = get("INSPLAN_SMOOTHING_EPSILON_FRACTION"))
        cfg.smoothing.epsilon_fraction = as_double("INSPLAN_SMOOTHING_EPSILON_FRACTION", v);
    if (const char* v = get("INSPLAN_SPLINE_DEGREE"))
        cfg.spline.degree = static_cast<int>(as_int("INSPLAN_SPLINE_DEGREE", v));
    if (const char* v = get("INSPLAN_SPLINE_LAMBDA"))
        cfg.spline.lambda = as_double("INSPLAN_SPLINE_LAMBDA", v);
    if (const char* v = get("INSPLAN_SPLINE_SPEED"))
        cfg.spline.speed = as_double("INSPLAN_SPLINE_SPEED", v);
    if (const char* v = get("INSPLAN_SPLINE_MAX_SUBDIV_ROUNDS"))
        cfg.spline.max_subdiv_rounds =
            static_cast<int>(as_int("INSPLAN_SPLINE_MAX_SUBDIV_ROUNDS", v));
    if (const char* v = get("INSPLAN_METRICS_SAMPLES"))
        cfg.metrics.samples = static_cast<int>(as_int("INSPLAN_METRICS_SAMPLES", v));
    validate_config(cfg);
}

void validate_config(const PlannerConfig& cfg) {
    const auto fraction = [](double v, const char* name) {
        if (!(v > 0.0 && v <= 1.0)) {
            throw InputError(std::string(name) + " must lie in (0, 1]");
        }
    };
    if (cfg.prm.samples < 1) throw InputError("prm.samples must be at least 1");
    fraction(cfg.prm.poisson_fraction, "prm.poisson_fraction");
    fraction(cfg.prm.connect_radius_fraction, "prm.connect_radius_fraction");
    fraction(cfg.grid.cell_fraction, "grid.cell_fraction");
    if (cfg.grid.robot_radius < 0.0) throw InputError("grid.robot_radius must be >= 0");
    if (cfg.oracle.mode != "geometric" && cfg.oracle.mode != "remote") {
        throw InputError("oracle.mode must be \"geometric\" or \"remote\"");
    }
    if (!(cfg.oracle.saliency_threshold >= 0.0 && cfg.oracle.saliency_threshold <= 1.0)) {
        throw InputError("oracle.saliency_threshold must lie in [0, 1]");
    }
    if (!(cfg.oracle.omega_ref > 0.0)) throw InputError("oracle.omega_ref must be positive");
    fraction(cfg.smoothing.alpha_min, "smoothing.alpha_min");
    fraction(cfg.smoothing.epsilon_fraction, "smoothing.epsilon_fraction");
    if (cfg.spline.degree < 1) throw InputError("spline.degree must be at least 1");
    if (cfg.spline.lambda < 0.0) throw InputError("spline.lambda must be >= 0");
    if (!(cfg.spline.speed > 0.0)) throw InputError("spline.speed must be positive");
    if (cfg.spline.max_subdiv_rounds < 0) {
        throw InputError("spline.max_subdiv_rounds must be >= 0");
    }
    if (cfg.metrics.samples < 2) throw InputError("metrics.samples must be at least 2");
}

std::string config_to_json(const PlannerConfig& cfg) {
    const json j = {
        {"seed", cfg.seed},
        {"prm",
         {{"samples", cfg.prm.samples},
          {"poisson_fraction", cfg.prm.poisson_fraction},
          {"connect_radius_fraction", cfg.prm.connect_radius_fraction}}},
        {"grid",
         {{"cell_fraction", cfg.grid.cell_fraction},
          {"robot_radius", cfg.grid.robot_radius}}},
        {"oracle",
         {{"mode", cfg.oracle.mode},
          {"url", cfg.oracle.url},
          {"saliency_threshold", cfg.oracle.saliency_threshold},
          {"omega_ref", cfg.oracle.omega_ref}}},
        {"smoothing",
         {{"enabled", cfg.smoothing.enabled},
          {"alpha_min", cfg.smoothing.alpha_min},
          {"epsilon_fraction", cfg.smoothing.epsilon_fraction}}},
        {"spline",
         {{"degree", cfg.spline.degree},
          {"lambda", cfg.spline.lambda},
          {"speed", cfg.spline.speed},
          {"max_subdiv_rounds", cfg.spline.max_subdiv_rounds}}},
        {"metrics", {{"samples", cfg.metrics.samples}}},
    };
    return j.dump(2) + "\n";
}

}  // namespace insplan
