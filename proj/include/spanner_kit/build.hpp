#pragma once

#include <map>
#include <numeric>
#include <set>

#include "graph.hpp"

namespace spanner_kit {

namespace detail {

inline void require_points(const PointSet& ps) {
    if (ps.empty()) throw InvalidParameter("point set is empty");
}

// For every (vertex, cone) the index minimizing (key, id), or -1.
template <class Key>
std::vector<std::vector<int>> closest_per_cone(const PointSet& ps, const ConeSystem& cs, Key key) {
    const int n = static_cast<int>(ps.size());
    std::vector<std::vector<int>> best(n, std::vector<int>(cs.k, -1));
    std::vector<std::vector<double>> bestv(n, std::vector<double>(cs.k, kInf));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const int c = cone_of(cs, ps[u].pos(), ps[v].pos());
            const double kv = key(c, ps[u].pos(), ps[v].pos());
            int& b = best[u][c];
            if (b < 0 || kv < bestv[u][c] || (kv == bestv[u][c] && ps[v].id < ps[b].id)) {
                b = v;
                bestv[u][c] = kv;
            }
        }
    return best;
}

inline std::vector<std::pair<int, int>> edges_from_choice(const std::vector<std::vector<int>>& best,
                                                          const std::vector<int>& cones) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t u = 0; u < best.size(); ++u)
        for (int c : cones)
            if (best[u][c] >= 0) e.push_back({static_cast<int>(u), best[u][c]});
    return e;
}

inline std::vector<int> all_cones(int k) {
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

}  // namespace detail

inline SpannerGraph build_yao(const PointSet& ps, int k) {
    const ConeSystem cs(k);
    detail::require_points(ps);
    auto best = detail::closest_per_cone(ps, cs, [](int, Vec2 u, Vec2 v) { return dist(u, v); });
    return SpannerGraph(ps, GraphKind::yao, cs, detail::edges_from_choice(best, detail::all_cones(k)));
}

inline SpannerGraph build_theta(const PointSet& ps, int k) {
    const ConeSystem cs(k);
    detail::require_points(ps);
    auto best = detail::closest_per_cone(ps, cs, [&](int c, Vec2 u, Vec2 v) { return projection_in(cs, c, u, v); });
    return SpannerGraph(ps, GraphKind::theta, cs, detail::edges_from_choice(best, detail::all_cones(k)));
}

namespace detail {

inline std::vector<std::pair<int, int>> half_theta6_edges(const PointSet& ps, const ConeSystem& cs) {
    auto best = closest_per_cone(ps, cs, [&](int c, Vec2 u, Vec2 v) { return projection_in(cs, c, u, v); });
    return edges_from_choice(best, {0, 2, 4});
}

}  // namespace detail

inline SpannerGraph build_half_theta6(const PointSet& ps) {
    detail::require_points(ps);
    const ConeSystem cs(6);
    return SpannerGraph(ps, GraphKind::half_theta6, cs, detail::half_theta6_edges(ps, cs));
}

inline SpannerGraph build_rotated_union(const PointSet& ps, int copies) {
    if (copies < 1) throw InvalidParameter("rotated union needs at least one copy");
    detail::require_points(ps);
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < copies; ++i) {
        const ConeSystem cs(6, i * kPi / (3.0 * copies));
        auto e = detail::half_theta6_edges(ps, cs);
        all.insert(all.end(), e.begin(), e.end());
    }
    return SpannerGraph(ps, GraphKind::rotated_union, ConeSystem(6), all, copies);
}

inline SpannerGraph build_mst(const PointSet& ps) {
    detail::require_points(ps);
    const int n = static_cast<int>(ps.size());
    struct E {
        long long q;
        std::int64_t a, b;
        int u, v;
    };
    std::vector<E> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // Quantized so that equal chords computed with rounding noise tie and fall back to ids.
            const long long q = std::llround(dist(ps[u].pos(), ps[v].pos()) * 1e9);
            const auto a = std::min(ps[u].id, ps[v].id), b = std::max(ps[u].id, ps[v].id);
            es.push_back({q, a, b, u, v});
        }
    std::sort(es.begin(), es.end(), [](const E& x, const E& y) { return std::tie(x.q, x.a, x.b) < std::tie(y.q, y.a, y.b); });
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<int, int>> chosen;
    for (const auto& e : es) {
        const int ru = find(e.u), rv = find(e.v);
        if (ru == rv) continue;
        parent[ru] = rv;
        chosen.push_back({e.u, e.v});
    }
    return SpannerGraph(ps, GraphKind::mst, ConeSystem(6), chosen);
}

// Clockwise offset of p from the counter-clockwise boundary of cone c at apex.
inline double offset_in_cone(const ConeSystem& cs, int c, Vec2 apex, Vec2 p) {
    return normalize_angle(cw_angle(p - apex) - cs.ccw_boundary_angle(c));
}

struct CanonicalPathInfo {
    int anchor = -1;
    ConeIndex negative_cone;
    std::vector<int> path;  // neighbours in the cone, clockwise around the anchor
    int closest = -1;       // -1 when the cone holds no neighbour
};

inline void require_half_theta6(const SpannerGraph& h) {
    if (h.kind() != GraphKind::half_theta6)
        throw InvalidParameter("expected a half_theta6 graph, got " + to_string(h.kind()));
}

// Neighbours of s inside cone c, in clockwise order.
inline std::vector<int> neighbors_in_cone(const SpannerGraph& g, int s, int c) {
    std::vector<int> out;
    for (int v : g.neighbors(s))
        if (cone_of(g.cones(), g.pos(s), g.pos(v)) == c) out.push_back(v);
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        return offset_in_cone(g.cones(), c, g.pos(s), g.pos(a)) < offset_in_cone(g.cones(), c, g.pos(s), g.pos(b));
    });
    return out;
}

// Neighbour of s in cone c minimizing (projection, id), or -1.
inline int closest_neighbor_in_cone(const SpannerGraph& g, int s, int c) {
    int best = -1;
    double bv = kInf;
    for (int v : g.neighbors(s)) {
        if (cone_of(g.cones(), g.pos(s), g.pos(v)) != c) continue;
        const double p = projection_in(g.cones(), c, g.pos(s), g.pos(v));
        if (best < 0 || p < bv || (p == bv && g.id(v) < g.id(best))) {
            best = v;
            bv = p;
        }
    }
    return best;
}

inline CanonicalPathInfo canonical_path(const SpannerGraph& h, int s, int negative_raw) {
    CanonicalPathInfo info;
    info.anchor = s;
    info.negative_cone = {negative_raw, h.k()};
    info.path = neighbors_in_cone(h, s, negative_raw);
    info.closest = closest_neighbor_in_cone(h, s, negative_raw);
    return info;
}

// First neighbour of x met when rotating away from cone c past its `side`
// boundary, skipping neighbours inside c. Along a canonical path this is the
// next path vertex on that side.
inline int side_neighbor(const SpannerGraph& g, int x, int c, Side side) {
    const auto& cs = g.cones();
    int best = -1;
    double bv = kInf;
    for (int v : g.neighbors(x)) {
        const double phi = cw_angle(g.pos(v) - g.pos(x));
        if (cone_of(cs, g.pos(x), g.pos(v)) == c) continue;
        const double gap = side == Side::ccw ? normalize_angle(cs.ccw_boundary_angle(c) - phi)
                                             : normalize_angle(phi - cs.cw_boundary_angle(c));
        if (gap < bv) {
            bv = gap;
            best = v;
        }
    }
    return best;
}

// The positive-cone neighbour of s in cone c (at most one in half-theta-6), or -1.
inline int positive_neighbor(const SpannerGraph& g, int s, int c) {
    for (int v : g.neighbors(s))
        if (cone_of(g.cones(), g.pos(s), g.pos(v)) == c) return v;
    return -1;
}

inline constexpr int kPositiveRaw[3] = {0, 4, 2};
inline constexpr int kNegativeRaw[3] = {3, 1, 5};

inline SpannerGraph build_g12(const SpannerGraph& h) {
    require_half_theta6(h);
    std::vector<std::pair<int, int>> keep;
    for (int s = 0; s < h.n(); ++s)
        for (int r : kNegativeRaw) {
            auto info = canonical_path(h, s, r);
            if (info.path.empty()) continue;
            keep.push_back({s, info.path.front()});
            keep.push_back({s, info.path.back()});
            keep.push_back({s, info.closest});
        }
    return SpannerGraph(h.points(), GraphKind::g12, h.cones(), keep);
}

inline SpannerGraph build_g9(const SpannerGraph& h) {
    require_half_theta6(h);
    std::vector<std::pair<int, int>> keep;
    std::vector<VertexHints> hints(h.n());
    for (int s = 0; s < h.n(); ++s)
        for (int t = 0; t < 3; ++t) {
            auto info = canonical_path(h, s, kNegativeRaw[t]);
            if (info.path.empty()) continue;
            keep.push_back({s, info.closest});
            for (std::size_t i = 1; i < info.path.size(); ++i) {
                if (!h.has_edge(info.path[i - 1], info.path[i]))
                    throw InternalInvariantViolation("consecutive neighbours of a negative cone are not adjacent");
                keep.push_back({info.path[i - 1], info.path[i]});
            }
            const int f = info.path.front(), l = info.path.back();
            hints[s].path_ends[t] = PathEnds{h.id(f), h.id(l), h.pos(f), h.pos(l)};
        }
    SpannerGraph g(h.points(), GraphKind::g9, h.cones(), keep);
    // Direction hints: from s, which way along v's canonical path leads to v's closest vertex.
    for (int s = 0; s < h.n(); ++s)
        for (int t = 0; t < 3; ++t) {
            const int c = kPositiveRaw[t];
            const int v = positive_neighbor(h, s, c);
            if (v < 0) continue;
            auto info = canonical_path(h, v, opposite_cone(c, 6));
            const auto it = std::find(info.path.begin(), info.path.end(), s);
            const auto i = it - info.path.begin();
            const auto j = std::find(info.path.begin(), info.path.end(), info.closest) - info.path.begin();
            if (i == j) continue;
            // Later path vertices are clockwise around v, reached past the ccw boundary of c.
            // At a path end both rotations can give the same vertex, so the order decides.
            const Side side = j > i ? Side::ccw : Side::cw;
            if (side_neighbor(g, s, c, side) != info.path[j > i ? i + 1 : i - 1])
                throw InternalInvariantViolation("canonical path neighbour is not a rotation neighbour");
            hints[s].toward_closest[t] = side;
        }
    g.set_hints(std::move(hints));
    return g;
}

}  // namespace spanner_kit
