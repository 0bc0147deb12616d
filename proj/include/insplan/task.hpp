#pragma once

#include <optional>
#include <string>
#include <vector>

#include "insplan/geometry.hpp"

namespace insplan {

enum class SpatialRelation { inside, over, in_front, around, arbitrary };

std::string to_string(SpatialRelation r);
SpatialRelation relation_from_string(const std::string& s);  // InputError on unknown

struct Poi {
    std::string name;
    SpatialRelation relation = SpatialRelation::arbitrary;
    Aabb aabb;
    Vec3 front_axis = Vec3::UnitX();
    double visible_range = 0.0;
};

struct TaskSpec {
    std::vector<Poi> ordered;    // must be visited in this index order
    std::vector<Poi> unordered;

    int total() const { return static_cast<int>(ordered.size() + unordered.size()); }
    // POIs are indexed ordered-first throughout the planner.
    const Poi& poi(int index) const {
        const int lo = static_cast<int>(ordered.size());
        return index < lo ? ordered[index] : unordered[index - lo];
    }
};

// Parses {"ordered":[Poi...],"unordered":[Poi...]} where Poi is
// {"name","relation","aabb":{"min","max"},"front_axis"?,"visible_range"?}.
// front_axis defaults to +X and is normalized; visible_range defaults to
// default_visible_range (the caller passes half the scene bounding-box
// diagonal). Duplicate names, missing fields, or an empty task are input
// errors.
TaskSpec load_task(const std::string& path, double default_visible_range);
TaskSpec parse_task(const std::string& json_text, double default_visible_range,
                    const std::string& origin = "task");

}  // namespace insplan
