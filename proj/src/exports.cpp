#include "insplan/exports.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "insplan/errors.hpp"

namespace insplan {

using nlohmann::json;

namespace {

json vec_to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

Vec3 vec_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
        !j[2].is_number()) {
        throw InputError(what + " must be an array of 3 numbers");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

std::string prm_to_json(const PrmGraph& prm) {
    json nodes = json::array();
    for (std::size_t i = 0; i < prm.nodes.size(); ++i) {
        json n = {{"id", i}, {"pos", vec_to_json(prm.nodes[i].position)}};
        n["clone_of"] = prm.nodes[i].clone_of ? json(*prm.nodes[i].clone_of) : json(nullptr);
        n["poi_id"] = prm.nodes[i].poi_id ? json(*prm.nodes[i].poi_id) : json(nullptr);
        nodes.push_back(std::move(n));
    }
    json edges = json::array();
    for (const auto& e : prm.edges) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"len", e.length}});
    }
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}}.dump(2) + "\n";
}

std::string plan_to_json(const VisitationPlan& plan, const DistanceClosure& closure) {
    json chosen = json::array();
    for (std::size_t poi = 0; poi < plan.chosen.size(); ++poi) {
        chosen.push_back({{"poi", poi}, {"node", closure.node_ids[plan.chosen[poi]]}});
    }
    return json{{"chosen", std::move(chosen)},
                {"order", plan.order},
                {"polyline", plan.polyline},
                {"cost", plan.cost}}
               .dump(2) +
           "\n";
}

std::string trajectory_to_json(const CompositeBezier& curve,
                               const OrientationProfile& profile) {
    json segments = json::array();
    for (const auto& seg : curve.segments) {
        json ctrl = json::array();
        for (const Vec3& c : seg.controls) ctrl.push_back(vec_to_json(c));
        segments.push_back(
            {{"degree", seg.degree()}, {"ctrl", std::move(ctrl)}, {"duration", seg.duration}});
    }
    json directions = json::array();
    for (const Vec3& d : profile.node_directions) directions.push_back(vec_to_json(d));
    return json{{"segments", std::move(segments)}, {"directions", std::move(directions)}}
               .dump(2) +
           "\n";
}

std::string metrics_to_json(const TrajectoryMetrics& m) {
    return json{{"mean_curvature", m.mean_curvature},
                {"jerk", m.jerk},
                {"steps", m.steps},
                {"distance", m.distance},
                {"skipped_samples", m.skipped_samples}}
               .dump(2) +
           "\n";
}

void trajectory_from_json(const std::string& text, CompositeBezier& curve,
                          OrientationProfile& profile, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin, 0, e.what());
    }
    if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array() ||
        !j.contains("directions") || !j["directions"].is_array()) {
        throw InputError("trajectory must carry \"segments\" and \"directions\" arrays");
    }
    curve.segments.clear();
    for (const auto& sj : j["segments"]) {
        if (!sj.is_object() || !sj.contains("ctrl") || !sj["ctrl"].is_array() ||
            !sj.contains("duration") || !sj["duration"].is_number()) {
            throw InputError("trajectory segment needs \"ctrl\" and \"duration\"");
        }
        BezierSegment seg;
        for (const auto& cj : sj["ctrl"]) seg.controls.push_back(vec_from_json(cj, "ctrl"));
        if (seg.controls.size() < 2) throw InputError("segment needs at least 2 controls");
        seg.duration = sj["duration"].get<double>();
        if (!(seg.duration > 0.0)) throw InputError("segment duration must be positive");
        if (sj.contains("degree") && sj["degree"].get<int>() != seg.degree()) {
            throw InputError("segment degree does not match its control count");
        }
        curve.segments.push_back(std::move(seg));
    }
    if (curve.segments.empty()) throw InputError("trajectory has no segments");
    profile.node_directions.clear();
    for (const auto& dj : j["directions"]) {
        profile.node_directions.push_back(vec_from_json(dj, "direction"));
    }
    if (profile.node_directions.size() != curve.segments.size() + 1) {
        throw InputError("direction count must be segment count + 1");
    }
}

namespace {

int sample_count(double total_duration, double rate_hz) {
    if (!(rate_hz > 0.0)) throw InputError("sampling rate must be positive");
    return static_cast<int>(std::floor(total_duration * rate_hz)) + 1;
}

}  // namespace

std::string trajectory_to_csv(const CompositeBezier& curve,
                              const OrientationProfile& profile, double rate_hz) {
    const double T = curve.total_duration();
    const int rows = sample_count(T, rate_hz);
    std::ostringstream out;
    out << "t,x,y,z,dx,dy,dz\n";
    out.precision(17);
    for (int i = 0; i < rows; ++i) {
        const double t = std::min(i / rate_hz, T);
        const Vec3 p = eval_position(curve, t);
        const Vec3 d = eval_orientation(profile, curve, t);
        out << t << ',' << p.x() << ',' << p.y() << ',' << p.z() << ',' << d.x() << ','
            << d.y() << ',' << d.z() << '\n';
    }
    return out.str();
}

namespace {

std::string ply_polyline(const std::vector<Vec3>& pts) {
    std::ostringstream out;
    out.precision(17);
    out << "ply\nformat ascii 1.0\n";
    out << "element vertex " << pts.size() << "\n";
    out << "property double x\nproperty double y\nproperty double z\n";
    out << "element edge " << (pts.empty() ? 0 : pts.size() - 1) << "\n";
    out << "property int vertex1\nproperty int vertex2\n";
    out << "end_header\n";
    for (const Vec3& p : pts) out << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) out << i << ' ' << i + 1 << '\n';
    return out.str();
}

}  // namespace

std::string trajectory_to_ply(const CompositeBezier& curve, double rate_hz) {
    const double T = curve.total_duration();
    const int rows = sample_count(T, rate_hz);
    std::vector<Vec3> pts;
    pts.reserve(rows);
    for (int i = 0; i < rows; ++i) {
        pts.push_back(eval_position(curve, std::min(i / rate_hz, T)));
    }
    return ply_polyline(pts);
}

std::string polyline_to_ply(const AnnotatedPolyline& poly) {
    return ply_polyline(poly.points);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open for writing: " + path);
    out << content;
    if (!out) throw InputError("failed writing " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace insplan
