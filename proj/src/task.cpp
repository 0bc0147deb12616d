#include "insplan/task.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "insplan/errors.hpp"

namespace insplan {

using nlohmann::json;

std::string to_string(SpatialRelation r) {
    switch (r) {
        case SpatialRelation::inside: return "inside";
        case SpatialRelation::over: return "over";
        case SpatialRelation::in_front: return "in_front";
        case SpatialRelation::around: return "around";
        case SpatialRelation::arbitrary: return "arbitrary";
    }
    return "arbitrary";
}

SpatialRelation relation_from_string(const std::string& s) {
    if (s == "inside") return SpatialRelation::inside;
    if (s == "over") return SpatialRelation::over;
    if (s == "in_front") return SpatialRelation::in_front;
    if (s == "around") return SpatialRelation::around;
    if (s == "arbitrary") return SpatialRelation::arbitrary;
    throw InputError("unknown spatial relation \"" + s + "\"");
}

namespace {

Vec3 parse_vec3(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3) {
        throw InputError(what + " must be an array of 3 numbers");
    }
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_number()) throw InputError(what + " must be numeric");
        v[i] = j[i].get<double>();
        if (!std::isfinite(v[i])) throw InputError(what + " contains a non-finite value");
    }
    return v;
}

Poi parse_poi(const json& j, double default_visible_range) {
    if (!j.is_object()) throw InputError("each POI must be a JSON object");
    Poi p;
    if (!j.contains("name") || !j["name"].is_string()) {
        throw InputError("POI is missing a string \"name\"");
    }
    p.name = j["name"].get<std::string>();
    if (!j.contains("relation") || !j["relation"].is_string()) {
        throw InputError("POI \"" + p.name + "\" is missing a string \"relation\"");
    }
    p.relation = relation_from_string(j["relation"].get<std::string>());
    if (!j.contains("aabb") || !j["aabb"].is_object()) {
        throw InputError("POI \"" + p.name + "\" is missing an \"aabb\" object");
    }
    p.aabb.min = parse_vec3(j["aabb"].value("min", json()), "aabb.min of \"" + p.name + "\"");
    p.aabb.max = parse_vec3(j["aabb"].value("max", json()), "aabb.max of \"" + p.name + "\"");
    if (!p.aabb.valid()) {
        throw InputError("POI \"" + p.name + "\" has aabb.min > aabb.max");
    }
    if (j.contains("front_axis")) {
        p.front_axis = parse_vec3(j["front_axis"], "front_axis of \"" + p.name + "\"");
        const double n = p.front_axis.norm();
        if (n < 1e-9) throw InputError("POI \"" + p.name + "\" has a zero front_axis");
        p.front_axis /= n;
    }
    if (j.contains("visible_range")) {
        if (!j["visible_range"].is_number()) {
            throw InputError("visible_range of \"" + p.name + "\" must be a number");
        }
        p.visible_range = j["visible_range"].get<double>();
    } else {
        p.visible_range = default_visible_range;
    }
    if (!(p.visible_range > 0.0)) {
        throw InputError("POI \"" + p.name + "\" has non-positive visible_range");
    }
    return p;
}

}  // namespace

TaskSpec parse_task(const std::string& json_text, double default_visible_range,
                    const std::string& origin) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin, 0, e.what());
    }
    if (!j.is_object()) throw InputError("task file must be a JSON object");

    TaskSpec task;
    for (const char* key : {"ordered", "unordered"}) {
        if (!j.contains(key)) continue;
        if (!j[key].is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
        for (const auto& pj : j[key]) {
            Poi p = parse_poi(pj, default_visible_range);
            (key == std::string("ordered") ? task.ordered : task.unordered).push_back(std::move(p));
        }
    }
    if (task.total() == 0) throw InputError("task defines no POIs");

    std::set<std::string> names;
    for (int i = 0; i < task.total(); ++i) {
        if (!names.insert(task.poi(i).name).second) {
            throw InputError("duplicate POI name \"" + task.poi(i).name + "\"");
        }
    }
    return task;
}

TaskSpec load_task(const std::string& path, double default_visible_range) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open task file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_task(ss.str(), default_visible_range, path);
}

}  // namespace insplan
