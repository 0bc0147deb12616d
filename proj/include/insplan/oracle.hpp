#pragma once

#include <functional>
#include <vector>

#include "insplan/geometry.hpp"
#include "insplan/occupancy.hpp"
#include "insplan/prm.hpp"
#include "insplan/task.hpp"

namespace insplan {

struct SaliencyVerdict {
    bool visible = false;
    double saliency = 0.0;  // in [0,1]; forced to 0 when not visible
    bool relation_ok = false;
};

// Does the point satisfy the POI's spatial relation?
//   inside    p within the aabb
//   over      p above the top face, within the XY footprint
//   in_front  on the positive side of front_axis through the centroid,
//             outside the aabb, within visible_range of the centroid
//   around    outside the aabb, within visible_range of the centroid
//   arbitrary always
bool relation_satisfied(const Vec3& p, const Poi& poi);

// Solid angle (steradians) subtended by the box at p: 4π for interior points,
// otherwise the sum of the unsigned triangle solid angles of the faces that
// face p (Van Oosterom–Strackee).
double box_solid_angle(const Aabb& box, const Vec3& p);

// visible: at least 5 of 9 rays (centroid + 8 corners) reach the box without
// crossing an occupied cell. saliency: clamp(Ω/omega_ref, 0, 1), zeroed when
// not visible.
SaliencyVerdict assess_geometric(const Vec3& node_pos, const Poi& poi,
                                 const OccupancyGrid& grid, double omega_ref);

inline bool is_salient(const SaliencyVerdict& v, double threshold) {
    return v.visible && v.saliency >= threshold && v.relation_ok;
}

// Aim point for the camera: the POI box centroid.
Vec3 focus_target(const Poi& poi);

class SaliencyOracle {
  public:
    virtual ~SaliencyOracle() = default;
    virtual SaliencyVerdict assess(const Vec3& position, const Poi& poi) = 0;
};

class GeometricOracle final : public SaliencyOracle {
  public:
    GeometricOracle(const OccupancyGrid& grid, double omega_ref)
        : grid_(grid), omega_ref_(omega_ref) {}
    SaliencyVerdict assess(const Vec3& position, const Poi& poi) override {
        return assess_geometric(position, poi, grid_, omega_ref_);
    }

  private:
    const OccupancyGrid& grid_;
    double omega_ref_;
};

// Adapter for tests and stubs.
class FunctionOracle final : public SaliencyOracle {
  public:
    using Fn = std::function<SaliencyVerdict(const Vec3&, const Poi&)>;
    explicit FunctionOracle(Fn fn) : fn_(std::move(fn)) {}
    SaliencyVerdict assess(const Vec3& position, const Poi& poi) override {
        return fn_(position, poi);
    }

  private:
    Fn fn_;
};

struct ValidSets {
    PrmGraph graph;                        // input graph plus clones
    std::vector<std::vector<int>> valid;   // per POI (ordered first): dedicated node ids
};

// Assesses every (node, POI) pair; a node salient for k POIs keeps the lowest
// POI index and gets k-1 clones (zero-length edge to the original), so every
// POI references node ids dedicated to it alone. Throws CoverageError naming
// the first POI whose valid set is empty.
ValidSets compute_valid_sets(const PrmGraph& prm, const TaskSpec& task,
                             SaliencyOracle& oracle, double threshold);

}  // namespace insplan
