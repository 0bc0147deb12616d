#pragma once

#include <vector>

#include <Eigen/Dense>

#include "insplan/prm.hpp"

namespace insplan {

// Shortest-path closure of the roadmap restricted to the valid nodes.
// dist(i,j) is indexed by position in `node_ids`; preds[i][w] is the
// predecessor of graph node w on a shortest path from node_ids[i] (-1 at the
// source and for unreached nodes).
struct DistanceClosure {
    std::vector<int> node_ids;
    Eigen::MatrixXd dist;
    std::vector<std::vector<int>> preds;

    int index_of(int node_id) const;  // -1 when absent
};

DistanceClosure all_pairs_distances(const PrmGraph& prm, const std::vector<int>& valid_ids);

// groups[i] lists candidate indices into closure.node_ids for POI i (ordered
// POIs occupy the leading l_ordered slots).
struct VisitationProblem {
    std::vector<std::vector<int>> groups;
    const DistanceClosure* closure = nullptr;
    int l_ordered = 0;
};

struct VisitationPlan {
    std::vector<int> chosen;    // per POI: closure index of the selected node
    std::vector<int> order;     // POI indices in visit sequence
    std::vector<int> polyline;  // graph node ids through the roadmap
    double cost = 0.0;
};

// Exact open-path solver with the semantics of the order-constrained MIP:
// one node per POI, free start (dummy first node), ordered POIs in index
// order, total roadmap distance minimized. Dynamic program over (POI set,
// last node); ties prefer visiting lower POI indices earlier, then smaller
// node ids. Instances with more than 20 POIs are refused.
VisitationPlan solve_visitation(const VisitationProblem& problem);

// Fills plan.polyline: witness shortest paths between consecutive chosen
// nodes, junction duplicates merged and zero-length clone hops collapsed.
// Returns, aligned with the polyline, the POI ids observed at each point
// (empty for connectors; a point can serve several POIs when clones
// collapse).
std::vector<std::vector<int>> expand_path(VisitationPlan& plan,
                                          const DistanceClosure& closure,
                                          const PrmGraph& prm);

}  // namespace insplan
