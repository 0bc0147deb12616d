#pragma once

#include "insplan/geometry.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace insplan {

enum class SceneFormat { obj, ply, xyz };

/// Returns the format implied by the file extension, if recognized.
std::optional<SceneFormat> scene_format_from_extension(const std::filesystem::path& path);

/// Static environment geometry. Meters, right-handed, Z-up. Point clouds
/// carry no triangles.
struct Scene {
    std::vector<Vec3> vertices;
    std::optional<std::vector<std::array<int, 3>>> triangles;
    Aabb bbox;

    bool is_point_cloud() const { return !triangles.has_value(); }
};

/// Loads OBJ (v/f records), PLY (ascii or binary little-endian), or
/// whitespace XYZ. Non-finite coordinates and out-of-range indices are parse
/// errors naming the offending line or element.
Scene load_scene(const std::filesystem::path& path, SceneFormat format);

}  // namespace insplan
