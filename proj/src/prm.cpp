#include "insplan/prm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "insplan/errors.hpp"
#include "insplan/rng.hpp"

namespace insplan {

std::vector<std::vector<std::pair<int, double>>> PrmGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(nodes.size());
    for (const PrmEdge& e : edges) {
        adj[e.u].emplace_back(e.v, e.length);
        adj[e.v].emplace_back(e.u, e.length);
    }
    return adj;
}

std::vector<Vec3> sample_free(const OccupancyGrid& grid, int n, std::uint64_t rng_seed) {
    if (n < 1) throw InputError("sample count must be at least 1");
    const std::vector<std::size_t> free = grid.free_cells();
    if (free.empty()) throw SamplingError("free space is empty; nothing to sample");

    Rng rng(rng_seed);
    const auto& dims = grid.dims();
    std::vector<Vec3> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        const std::size_t flat = free[uniform_index(rng, free.size())];
        const int ix = static_cast<int>(flat % dims[0]);
        const int iy = static_cast<int>((flat / dims[0]) % dims[1]);
        const int iz = static_cast<int>(flat / (static_cast<std::size_t>(dims[0]) * dims[1]));
        const Aabb cb = grid.cell_bounds(ix, iy, iz);
        Vec3 p;
        for (int i = 0; i < 3; ++i) p[i] = uniform_in(rng, cb.min[i], cb.max[i]);
        out.push_back(p);
    }
    return out;
}

std::vector<Vec3> poisson_sparsify(const std::vector<Vec3>& points, double r_min) {
    if (r_min < 0.0) throw InputError("poisson radius must be non-negative");
    std::vector<Vec3> kept;
    kept.reserve(points.size());
    const double r2 = r_min * r_min;
    for (const Vec3& p : points) {
        bool ok = true;
        for (const Vec3& q : kept) {
            if ((p - q).squaredNorm() < r2) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back(p);
    }
    return kept;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PrmGraph build_prm(const std::vector<Vec3>& points, const OccupancyGrid& grid,
                   double connect_radius) {
    if (points.empty()) throw InputError("cannot build a roadmap from zero points");
    if (connect_radius <= 0.0) throw InputError("connect_radius must be positive");

    PrmGraph g;
    for (const Vec3& p : points) g.add_node(p);
    const int n = static_cast<int>(points.size());

    double radius = connect_radius;
    for (int attempt = 0;; ++attempt) {
        g.edges.clear();
        UnionFind uf(n);
        const double r2 = radius * radius;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double d2 = (points[i] - points[j]).squaredNorm();
                if (d2 > r2 || d2 == 0.0) continue;
                if (!segment_free(grid, points[i], points[j])) continue;
                g.edges.push_back({i, j, std::sqrt(d2)});
                uf.unite(i, j);
            }
        }
        bool connected = true;
        for (int i = 1; i < n; ++i) {
            if (uf.find(i) != uf.find(0)) {
                connected = false;
                break;
            }
        }
        if (connected) return g;
        if (attempt == 6) {
            std::vector<int> sizes(n, 0);
            for (int i = 0; i < n; ++i) ++sizes[uf.find(i)];
            std::string parts;
            std::sort(sizes.rbegin(), sizes.rend());
            for (int s : sizes) {
                if (s == 0) break;
                if (!parts.empty()) parts += ", ";
                parts += std::to_string(s);
            }
            throw ConnectivityError("roadmap is disconnected after 6 radius doublings; "
                                    "component sizes: " + parts);
        }
        radius *= 2.0;
    }
}

}  // namespace insplan
