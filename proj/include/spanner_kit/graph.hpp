#pragma once

#include <array>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace spanner_kit {

enum class GraphKind { yao, theta, half_theta6, g12, g9, rotated_union, mst, tree };

inline std::string to_string(GraphKind k) {
    switch (k) {
        case GraphKind::yao: return "yao";
        case GraphKind::theta: return "theta";
        case GraphKind::half_theta6: return "half_theta6";
        case GraphKind::g12: return "g12";
        case GraphKind::g9: return "g9";
        case GraphKind::rotated_union: return "rotated_union";
        case GraphKind::mst: return "mst";
        case GraphKind::tree: return "tree";
    }
    return "?";
}

inline GraphKind graph_kind_from_string(const std::string& s) {
    for (auto k : {GraphKind::yao, GraphKind::theta, GraphKind::half_theta6, GraphKind::g12, GraphKind::g9,
                   GraphKind::rotated_union, GraphKind::mst, GraphKind::tree})
        if (to_string(k) == s) return k;
    throw InvalidParameter("unknown graph kind '" + s + "'");
}

// Which boundary of a cone a neighbour lies beyond, seen from the apex.
enum class Side { ccw, cw };

inline Side flip(Side s) { return s == Side::ccw ? Side::cw : Side::ccw; }

// Per-vertex routing hints carried by G9. Positive cones are addressed by
// triple index (raw 0, 4, 2), negative cones likewise (raw 3, 1, 5).
struct PathEnds {
    std::int64_t first_id = -1;
    std::int64_t last_id = -1;
    Vec2 first;
    Vec2 last;
    friend bool operator==(const PathEnds&, const PathEnds&) = default;
};

struct VertexHints {
    // Side of the positive cone to leave through to walk toward the vertex
    // closest to that cone's neighbour; empty when no walk is needed or the cone is empty.
    std::array<std::optional<Side>, 3> toward_closest;
    // First/last canonical-path vertices in clockwise order per negative cone.
    std::array<std::optional<PathEnds>, 3> path_ends;
    friend bool operator==(const VertexHints&, const VertexHints&) = default;
};

class SpannerGraph {
public:
    SpannerGraph() = default;

    // Edges are pairs of point indices; duplicates and orientation are ignored.
    SpannerGraph(PointSet ps, GraphKind kind, ConeSystem cones, const std::vector<std::pair<int, int>>& edges,
                 int copies = 1)
        : ps_(std::move(ps)), kind_(kind), cones_(cones), copies_(copies), adj_(ps_.size()) {
        for (auto [u, v] : edges) {
            if (u == v) continue;
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            auto& a = adj_[u];
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            const Vec2 p = ps_[u].pos();
            // Counter-clockwise order starting from +x.
            std::sort(a.begin(), a.end(), [&](int x, int y) {
                const Vec2 dx = ps_[x].pos() - p, dy = ps_[y].pos() - p;
                const double ax = std::atan2(dx.y, dx.x), ay = std::atan2(dy.y, dy.x);
                return ax != ay ? ax < ay : x < y;
            });
        }
    }

    const PointSet& points() const { return ps_; }
    GraphKind kind() const { return kind_; }
    const ConeSystem& cones() const { return cones_; }
    int k() const { return cones_.k; }
    int copies() const { return copies_; }
    int n() const { return static_cast<int>(ps_.size()); }
    Vec2 pos(int v) const { return ps_[v].pos(); }
    std::int64_t id(int v) const { return ps_[v].id; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_edge(int u, int v) const {
        const auto& a = adj_[u];
        return std::find(a.begin(), a.end(), v) != a.end();
    }

    double length(int u, int v) const { return dist(pos(u), pos(v)); }

    // Index pairs (u < v) sorted by (id(u), id(v)) after orienting by id.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n(); ++u)
            for (int v : adj_[u])
                if (id(u) < id(v)) out.push_back({u, v});
        std::sort(out.begin(), out.end(),
                  [&](auto a, auto b) { return std::pair(id(a.first), id(a.second)) < std::pair(id(b.first), id(b.second)); });
        return out;
    }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& a : adj_) m += a.size();
        return m / 2;
    }

    const std::optional<std::vector<VertexHints>>& hints() const { return hints_; }
    void set_hints(std::vector<VertexHints> h) { hints_ = std::move(h); }

    friend bool operator==(const SpannerGraph& a, const SpannerGraph& b) {
        return a.ps_ == b.ps_ && a.kind_ == b.kind_ && a.cones_ == b.cones_ && a.adj_ == b.adj_ &&
               a.hints_ == b.hints_ && a.copies_ == b.copies_;
    }

private:
    PointSet ps_;
    GraphKind kind_ = GraphKind::tree;
    ConeSystem cones_;
    int copies_ = 1;
    std::vector<std::vector<int>> adj_;
    std::optional<std::vector<VertexHints>> hints_;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Single-source shortest distances; `allowed` restricts the vertex set when given.
inline std::vector<double> dijkstra(const SpannerGraph& g, int src, const std::vector<char>* allowed = nullptr) {
    std::vector<double> d(g.n(), kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > d[u]) continue;
        for (int v : g.neighbors(u)) {
            if (allowed && !(*allowed)[v]) continue;
            const double nd = du + g.length(u, v);
            if (nd < d[v]) {
                d[v] = nd;
                pq.push({nd, v});
            }
        }
    }
    return d;
}

struct PathResult {
    std::vector<int> vertices;  // empty when unreachable
    double length = kInf;
};

// Shortest u-w path; among paths within tolerance of the optimum the
// lexicographically smallest id sequence is returned.
inline PathResult shortest_path(const SpannerGraph& g, int u, int w, const std::vector<char>* allowed = nullptr) {
    PathResult r;
    const auto dw = dijkstra(g, w, allowed);
    if (dw[u] == kInf) return r;
    r.length = dw[u];
    r.vertices.push_back(u);
    int cur = u;
    const double tol = 1e-12 * std::max(1.0, dw[u]);
    while (cur != w) {
        int best = -1;
        for (int v : g.neighbors(cur)) {
            if (allowed && !(*allowed)[v]) continue;
            if (dw[v] == kInf) continue;
            if (std::abs(g.length(cur, v) + dw[v] - dw[cur]) <= tol && dw[v] < dw[cur] &&
                (best < 0 || g.id(v) < g.id(best)))
                best = v;
        }
        if (best < 0) throw InternalInvariantViolation("shortest path reconstruction failed");
        r.vertices.push_back(best);
        cur = best;
    }
    return r;
}

inline double path_length(const SpannerGraph& g, const std::vector<int>& path) {
    double s = 0;
    for (std::size_t i = 1; i < path.size(); ++i) s += g.length(path[i - 1], path[i]);
    return s;
}

}  // namespace spanner_kit
