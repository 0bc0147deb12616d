#include "insplan/routing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <unordered_map>

#include "insplan/errors.hpp"

namespace insplan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

int DistanceClosure::index_of(int node_id) const {
    const auto it = std::find(node_ids.begin(), node_ids.end(), node_id);
    return it == node_ids.end() ? -1 : static_cast<int>(it - node_ids.begin());
}

DistanceClosure all_pairs_distances(const PrmGraph& prm, const std::vector<int>& valid_ids) {
    const int n = static_cast<int>(prm.nodes.size());
    const int m = static_cast<int>(valid_ids.size());
    const auto adj = prm.adjacency();

    DistanceClosure out;
    out.node_ids = valid_ids;
    out.dist.resize(m, m);
    out.preds.assign(m, {});

    std::vector<double> d(n);
    for (int s = 0; s < m; ++s) {
        std::fill(d.begin(), d.end(), kInf);
        std::vector<int>& pred = out.preds[s];
        pred.assign(n, -1);
        d[valid_ids[s]] = 0.0;

        // (distance, node) pairs; the node id in the key makes pop order, and
        // with it predecessor choice, deterministic under distance ties.
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        pq.emplace(0.0, valid_ids[s]);
        while (!pq.empty()) {
            const auto [du, u] = pq.top();
            pq.pop();
            if (du > d[u]) continue;
            for (const auto& [v, len] : adj[u]) {
                const double dv = du + len;
                if (dv < d[v]) {
                    d[v] = dv;
                    pred[v] = u;
                    pq.emplace(dv, v);
                }
            }
        }
        for (int t = 0; t < m; ++t) {
            if (d[valid_ids[t]] == kInf) {
                throw PlannerError("routing",
                                   "valid node " + std::to_string(valid_ids[t]) +
                                       " unreachable from " + std::to_string(valid_ids[s]) +
                                       "; the roadmap connectivity invariant is broken");
            }
            out.dist(s, t) = d[valid_ids[t]];
        }
    }
    return out;
}

namespace {

// Flattened candidate table: each (POI, candidate) pair becomes one slot.
struct Slots {
    std::vector<int> group_of;    // slot -> POI index
    std::vector<int> closure_of;  // slot -> closure index
    std::vector<std::vector<int>> slots_of_group;
};

// Precedence: an ordered POI g may join only when exactly POIs 0..g-1 of the
// ordered prefix are already visited.
bool may_add(std::uint32_t mask, int g, int l_ordered) {
    if (g >= l_ordered) return true;
    const std::uint32_t prefix = (std::uint32_t{1} << g) - 1;
    return (mask & ((std::uint32_t{1} << l_ordered) - 1)) == prefix;
}

}  // namespace

VisitationPlan solve_visitation(const VisitationProblem& problem) {
    const int L = static_cast<int>(problem.groups.size());
    if (L == 0) throw InputError("visitation problem has no POIs");
    if (L > 20) {
        throw InstanceSizeError("exact solver accepts at most 20 POIs, got " +
                                std::to_string(L));
    }
    if (problem.l_ordered > L) throw InputError("ordered count exceeds group count");
    for (int g = 0; g < L; ++g) {
        if (problem.groups[g].empty()) {
            throw InputError("POI " + std::to_string(g) + " has no candidate nodes");
        }
    }
    const Eigen::MatrixXd& dist = problem.closure->dist;

    Slots slots;
    for (int g = 0; g < L; ++g) {
        slots.slots_of_group.emplace_back();
        for (int c : problem.groups[g]) {
            slots.slots_of_group.back().push_back(static_cast<int>(slots.group_of.size()));
            slots.group_of.push_back(g);
            slots.closure_of.push_back(c);
        }
    }
    const int S = static_cast<int>(slots.group_of.size());
    const std::uint32_t full = (std::uint32_t{1} << L) - 1;

    // Cost-to-go h[mask][slot]: cheapest completion given `mask` visited and
    // the path currently at `slot` (whose group is in mask). Masks are
    // allocated lazily; precedence keeps the feasible set small whenever
    // ordered POIs dominate.
    std::unordered_map<std::uint32_t, std::vector<double>> h;
    h.reserve(std::size_t{1} << std::min(L, 20));

    std::vector<std::uint32_t> feasible;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t omask = mask & ((std::uint32_t{1} << problem.l_ordered) - 1);
        if ((omask & (omask + 1)) != 0) continue;  // ordered bits must be a prefix
        feasible.push_back(mask);
    }
    std::sort(feasible.begin(), feasible.end(),
              [](std::uint32_t a, std::uint32_t b) {
                  const int pa = std::popcount(a), pb = std::popcount(b);
                  return pa != pb ? pa > pb : a < b;
              });

    for (const std::uint32_t mask : feasible) {
        std::vector<double> row(S, kInf);
        for (int s = 0; s < S; ++s) {
            if (!(mask >> slots.group_of[s] & 1)) continue;
            if (mask == full) {
                row[s] = 0.0;
                continue;
            }
            double best = kInf;
            for (int g = 0; g < L; ++g) {
                if (mask >> g & 1 || !may_add(mask, g, problem.l_ordered)) continue;
                const auto& next_row = h.at(mask | (std::uint32_t{1} << g));
                for (int t : slots.slots_of_group[g]) {
                    const double v =
                        dist(slots.closure_of[s], slots.closure_of[t]) + next_row[t];
                    best = std::min(best, v);
                }
            }
            row[s] = best;
        }
        h.emplace(mask, std::move(row));
    }

    // Forward reconstruction: free start, greedy over (total cost, POI index,
    // node id) per step — the lexicographic tie-break. `total` re-evaluates
    // the same expression the recurrence minimized, so exact == comparisons
    // recover the DP optimum bit-for-bit.
    VisitationPlan plan;
    plan.chosen.assign(L, -1);

    std::uint32_t mask = 0;
    int cur_slot = -1;
    for (int step = 0; step < L; ++step) {
        int best_g = -1, best_slot = -1;
        double best_total = kInf;
        for (int g = 0; g < L; ++g) {
            if (mask >> g & 1 || !may_add(mask, g, problem.l_ordered)) continue;
            const auto& next_row = h.at(mask | (std::uint32_t{1} << g));
            for (int t : slots.slots_of_group[g]) {
                const double hop =
                    cur_slot < 0 ? 0.0
                                 : dist(slots.closure_of[cur_slot], slots.closure_of[t]);
                const double total = hop + next_row[t];
                bool better = total < best_total;
                if (total == best_total && best_g != -1) {
                    better = g < best_g ||
                             (g == best_g &&
                              problem.closure->node_ids[slots.closure_of[t]] <
                                  problem.closure->node_ids[slots.closure_of[best_slot]]);
                }
                if (better) {
                    best_total = total;
                    best_g = g;
                    best_slot = t;
                }
            }
        }
        plan.order.push_back(best_g);
        plan.chosen[best_g] = slots.closure_of[best_slot];
        if (step == 0) plan.cost = best_total;  // h already contains the full path
        mask |= std::uint32_t{1} << best_g;
        cur_slot = best_slot;
    }
    return plan;
}

std::vector<std::vector<int>> expand_path(VisitationPlan& plan,
                                          const DistanceClosure& closure,
                                          const PrmGraph& prm) {
    // Walk chosen nodes in visit order, stitching Dijkstra witness paths.
    std::vector<int> raw;           // graph node ids, junctions duplicated
    std::vector<int> waypoint_at;   // poi id per raw entry, -1 for connectors
    for (std::size_t k = 0; k < plan.order.size(); ++k) {
        const int poi = plan.order[k];
        const int ci = plan.chosen[poi];
        const int node = closure.node_ids[ci];
        if (k == 0) {
            raw.push_back(node);
            waypoint_at.push_back(poi);
            continue;
        }
        const int prev_poi = plan.order[k - 1];
        const int src_ci = plan.chosen[prev_poi];
        // Witness path from node_ids[src_ci] to node, reversed via preds.
        std::vector<int> hop;
        for (int w = node; w != -1; w = closure.preds[src_ci][w]) hop.push_back(w);
        std::reverse(hop.begin(), hop.end());
        for (std::size_t i = 1; i < hop.size(); ++i) {
            raw.push_back(hop[i]);
            waypoint_at.push_back(hop[i] == node && i + 1 == hop.size() ? poi : -1);
        }
        if (hop.size() == 1) {
            // Same graph node serves consecutive POIs (zero-length hop).
            raw.push_back(node);
            waypoint_at.push_back(poi);
        }
    }

    // Collapse coincident consecutive positions (clone hops and revisited
    // junctions), merging their POI annotations.
    plan.polyline.clear();
    std::vector<std::vector<int>> pois_at;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Vec3 p = prm.nodes[raw[i]].position;
        if (!plan.polyline.empty() &&
            (prm.nodes[plan.polyline.back()].position - p).norm() <= 1e-9) {
            if (waypoint_at[i] >= 0) pois_at.back().push_back(waypoint_at[i]);
            continue;
        }
        plan.polyline.push_back(raw[i]);
        pois_at.emplace_back();
        if (waypoint_at[i] >= 0) pois_at.back().push_back(waypoint_at[i]);
    }
    return pois_at;
}

}  // namespace insplan
