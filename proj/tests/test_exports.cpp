#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curves.hpp"
#include "insplan/errors.hpp"
#include "insplan/exports.hpp"

using insplan::AnnotatedPolyline;
using insplan::CompositeBezier;
using insplan::InputError;
using insplan::OrientationProfile;
using insplan::Vec3;
using nlohmann::json;

namespace {

/// Two-segment straight x-axis run at speed 5 with integer-exact controls.
CompositeBezier straight_line(double second_duration = 1.0) {
    std::vector<curves::JointState> states(3);
    states[0].p = {0, 0, 0};
    states[1].p = {5, 0, 0};
    states[2].p = {10, 0, 0};
    for (auto& s : states) s.v = {5, 0, 0};
    return curves::curve_from_states(states, {1.0, second_duration});
}

OrientationProfile unit_y_profile(std::size_t joints) {
    OrientationProfile p;
    p.node_directions.assign(joints, Vec3(0, 1, 0));
    return p;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

/// A minimal well-formed trajectory document to mutate in the error tests.
json valid_doc() {
    return json{{"segments", json::array({json{
                    {"ctrl", json::array({{0, 0, 0}, {1, 0, 0}})},
                    {"duration", 1.0},
                }})},
                {"directions", json::array({{0, 1, 0}, {0, 1, 0}})}};
}

void parse_doc(const json& j) {
    CompositeBezier curve;
    OrientationProfile profile;
    insplan::trajectory_from_json(j.dump(), curve, profile);
}

}  // namespace

TEST_CASE("trajectory JSON round-trips bit-exactly") {
    const CompositeBezier curve = curves::circle_curve(1.7, 5);
    OrientationProfile profile;
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    for (std::size_t i = 0; i <= curve.segments.size(); ++i) {
        profile.node_directions.push_back(
            Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized());
    }

    const std::string text = insplan::trajectory_to_json(curve, profile);
    CompositeBezier back;
    OrientationProfile back_profile;
    insplan::trajectory_from_json(text, back, back_profile);

    REQUIRE(back.segments.size() == curve.segments.size());
    bool exact = true;
    for (std::size_t k = 0; k < curve.segments.size(); ++k) {
        exact &= back.segments[k].duration == curve.segments[k].duration;
        REQUIRE(back.segments[k].controls.size() == curve.segments[k].controls.size());
        for (std::size_t i = 0; i < curve.segments[k].controls.size(); ++i) {
            exact &= back.segments[k].controls[i] == curve.segments[k].controls[i];
        }
    }
    for (std::size_t i = 0; i < profile.node_directions.size(); ++i) {
        exact &= back_profile.node_directions[i] == profile.node_directions[i];
    }
    CHECK(exact);

    // Serializing the parsed copy reproduces the exact byte stream.
    CHECK(insplan::trajectory_to_json(back, back_profile) == text);
}

TEST_CASE("trajectory_from_json rejects malformed documents") {
    CompositeBezier curve;
    OrientationProfile profile;
    CHECK_THROWS_AS(insplan::trajectory_from_json("###", curve, profile),
                    insplan::ParseError);
    CHECK_THROWS_WITH_AS(
        insplan::trajectory_from_json(R"({"segments": []})", curve, profile),
        doctest::Contains("must carry \"segments\" and \"directions\""), InputError);

    {
        json j = valid_doc();
        j["segments"] = json::array();
        j["directions"] = json::array();
        CHECK_THROWS_WITH_AS(parse_doc(j), doctest::Contains("no segments"), InputError);
    }
    {
        json j = valid_doc();
        j["segments"][0] = 5;
        CHECK_THROWS_WITH_AS(parse_doc(j),
                             doctest::Contains("needs \"ctrl\" and \"duration\""),
                             InputError);
    }
    {
        json j = valid_doc();
        j["segments"][0]["ctrl"] = json::array({{0, 0, 0}});
        CHECK_THROWS_WITH_AS(parse_doc(j), doctest::Contains("at least 2 controls"),
                             InputError);
    }
    {
        json j = valid_doc();
        j["segments"][0]["ctrl"][1] = json::array({1, 0});
        CHECK_THROWS_WITH_AS(parse_doc(j),
                             doctest::Contains("ctrl must be an array of 3 numbers"),
                             InputError);
    }
    {
        json j = valid_doc();
        j["segments"][0]["duration"] = 0.0;
        CHECK_THROWS_WITH_AS(parse_doc(j), doctest::Contains("duration must be positive"),
                             InputError);
    }
    {
        json j = valid_doc();
        j["segments"][0]["degree"] = 3;  // but only 2 controls
        CHECK_THROWS_WITH_AS(parse_doc(j),
                             doctest::Contains("does not match its control count"),
                             InputError);
    }
    {
        json j = valid_doc();
        j["directions"][0] = "up";
        CHECK_THROWS_WITH_AS(parse_doc(j),
                             doctest::Contains("direction must be an array of 3 numbers"),
                             InputError);
    }
    {
        json j = valid_doc();
        j["directions"].push_back(json::array({0, 0, 1}));
        CHECK_THROWS_WITH_AS(parse_doc(j), doctest::Contains("segment count + 1"),
                             InputError);
    }
}

TEST_CASE("CSV sampling: header, fencepost row count, exact sample values") {
    const CompositeBezier line = straight_line();  // T = 2.0
    const OrientationProfile profile = unit_y_profile(3);

    const std::string csv = insplan::trajectory_to_csv(line, profile, 10.0);
    const auto rows = lines_of(csv);
    REQUIRE(rows.size() == 22);  // header + floor(2.0 * 10) + 1
    CHECK(rows[0] == "t,x,y,z,dx,dy,dz");
    CHECK(rows[1] == "0,0,0,0,0,1,0");
    CHECK(rows[21] == "2,10,0,0,0,1,0");  // clamped exactly to T
    CHECK(csv.back() == '\n');

    // Every sampled position matches the curve evaluation bit-for-bit after
    // the 17-significant-digit round trip.
    bool exact = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream in(rows[i]);
        std::string field;
        std::vector<double> v;
        while (std::getline(in, field, ',')) v.push_back(std::stod(field));
        REQUIRE(v.size() == 7);
        const Vec3 p = insplan::eval_position(line, v[0]);
        exact &= v[1] == p.x() && v[2] == p.y() && v[3] == p.z();
        exact &= v[4] == 0.0 && v[5] == 1.0 && v[6] == 0.0;
    }
    CHECK(exact);
}

TEST_CASE("CSV fencepost when the duration is not a whole number of steps") {
    const CompositeBezier line = straight_line(0.9375);  // T = 1.9375 exactly
    const OrientationProfile profile = unit_y_profile(3);

    // rate 16: T*rate = 31 exactly, so the last row lands on T.
    auto rows = lines_of(insplan::trajectory_to_csv(line, profile, 16.0));
    CHECK(rows.size() == 1 + 32);
    CHECK(rows.back().substr(0, rows.back().find(',')) == "1.9375");

    // rate 10: T*rate = 19.375, so sampling stops short of T at t = 19/10.
    rows = lines_of(insplan::trajectory_to_csv(line, profile, 10.0));
    CHECK(rows.size() == 1 + 20);
    CHECK(std::stod(rows.back().substr(0, rows.back().find(','))) == 19.0 / 10.0);
}

TEST_CASE("polyline PLY is the exact expected document") {
    AnnotatedPolyline poly;
    poly.points = {{0, 0, 0}, {1.5, 2, 0}, {3, -0.5, 4}};
    poly.waypoint_pois = {{0}, {}, {1}};

    const std::string expected =
        "ply\n"
        "format ascii 1.0\n"
        "element vertex 3\n"
        "property double x\n"
        "property double y\n"
        "property double z\n"
        "element edge 2\n"
        "property int vertex1\n"
        "property int vertex2\n"
        "end_header\n"
        "0 0 0\n"
        "1.5 2 0\n"
        "3 -0.5 4\n"
        "0 1\n"
        "1 2\n";
    CHECK(insplan::polyline_to_ply(poly) == expected);
}

TEST_CASE("trajectory PLY sample counts follow the same fencepost rule") {
    const CompositeBezier line = straight_line();  // T = 2.0
    const std::string ply = insplan::trajectory_to_ply(line, 4.0);
    const auto rows = lines_of(ply);
    CHECK(rows[2] == "element vertex 9");
    CHECK(rows[6] == "element edge 8");
    // Vertex block starts after end_header (line 9); sample 4 sits at t = 1.
    CHECK(rows[10 + 4] == "5 0 0");
    CHECK(rows.size() == 10 + 9 + 8);
}

TEST_CASE("non-positive sampling rates are rejected") {
    const CompositeBezier line = straight_line();
    const OrientationProfile profile = unit_y_profile(3);
    CHECK_THROWS_WITH_AS(insplan::trajectory_to_csv(line, profile, 0.0),
                         doctest::Contains("sampling rate must be positive"), InputError);
    CHECK_THROWS_AS(insplan::trajectory_to_ply(line, -1.0), InputError);
}

TEST_CASE("roadmap JSON carries positions, clone links and POI assignments") {
    insplan::PrmGraph prm;
    prm.add_node({1, 2, 3});
    prm.add_node({1, 2, 3});
    prm.add_node({4, 0, -1});
    prm.nodes[0].poi_id = 0;
    prm.nodes[1].clone_of = 0;
    prm.nodes[1].poi_id = 1;
    prm.edges.push_back({0, 1, 0.0});
    prm.edges.push_back({1, 2, 2.5});

    const json j = json::parse(insplan::prm_to_json(prm));
    REQUIRE(j["nodes"].size() == 3);
    CHECK(j["nodes"][0]["pos"] == json::array({1.0, 2.0, 3.0}));
    CHECK(j["nodes"][0]["clone_of"].is_null());
    CHECK(j["nodes"][0]["poi_id"] == 0);
    CHECK(j["nodes"][1]["clone_of"] == 0);
    CHECK(j["nodes"][1]["poi_id"] == 1);
    CHECK(j["nodes"][2]["poi_id"].is_null());
    REQUIRE(j["edges"].size() == 2);
    CHECK(j["edges"][1]["u"] == 1);
    CHECK(j["edges"][1]["v"] == 2);
    CHECK(j["edges"][1]["len"] == 2.5);
}

TEST_CASE("plan JSON maps chosen closure slots back to graph node ids") {
    insplan::DistanceClosure closure;
    closure.node_ids = {10, 20, 30};
    closure.dist = Eigen::MatrixXd::Zero(3, 3);

    insplan::VisitationPlan plan;
    plan.chosen = {2, 0};
    plan.order = {1, 0};
    plan.polyline = {10, 5, 30};
    plan.cost = 7.25;

    const json j = json::parse(insplan::plan_to_json(plan, closure));
    REQUIRE(j["chosen"].size() == 2);
    CHECK(j["chosen"][0]["poi"] == 0);
    CHECK(j["chosen"][0]["node"] == 30);
    CHECK(j["chosen"][1]["node"] == 10);
    CHECK(j["order"] == json::array({1, 0}));
    CHECK(j["polyline"] == json::array({10, 5, 30}));
    CHECK(j["cost"] == 7.25);
}

TEST_CASE("metrics JSON round-trips every field exactly") {
    insplan::TrajectoryMetrics m;
    m.mean_curvature = 0.123;
    m.jerk = 4.5;
    m.steps = 7;
    m.distance = 89.0625;
    m.skipped_samples = 2;

    const json j = json::parse(insplan::metrics_to_json(m));
    CHECK(j["mean_curvature"].get<double>() == 0.123);
    CHECK(j["jerk"].get<double>() == 4.5);
    CHECK(j["steps"].get<int>() == 7);
    CHECK(j["distance"].get<double>() == 89.0625);
    CHECK(j["skipped_samples"].get<int>() == 2);
}

TEST_CASE("write_file/read_file round-trip binary content") {
    const std::string path = "/tmp/insplan_exports_roundtrip.bin";
    std::string content = "line1\nline2\r\n";
    content.push_back('\0');
    content += "tail";
    insplan::write_file(path, content);
    CHECK(insplan::read_file(path) == content);

    CHECK_THROWS_WITH_AS(insplan::read_file("/nonexistent/file.txt"),
                         doctest::Contains("cannot open"), InputError);
    CHECK_THROWS_WITH_AS(insplan::write_file("/nonexistent/dir/file.txt", "x"),
                         doctest::Contains("cannot open for writing"), InputError);
}
