#pragma once

#include <cmath>
#include <functional>
#include <set>

#include "spanner_kit/spanner_kit.hpp"

namespace support {

using namespace spanner_kit;

inline PointSet random_points(std::uint64_t seed, int n, int k = 6) {
    RunConfig c;
    c.seed = seed;
    c.n = n;
    c.k = k;
    return gen_random(c);
}

// Cone of v around u from the two boundary half-planes, no angle reduction.
inline int cone_by_halfplanes(const ConeSystem& cs, Vec2 u, Vec2 v) {
    const Vec2 d = v - u;
    for (int i = 0; i < cs.k; ++i) {
        const Vec2 l = direction(cs.ccw_boundary_angle(i));
        const Vec2 r = direction(cs.cw_boundary_angle(i));
        const bool after_l = cross(l, d) < 0;
        const bool before_r = cross(d, r) < 0;
        const bool on_r = std::abs(cross(d, r)) < 1e-12 * norm(d) && dot(d, r) > 0;
        if (cs.k == 2 ? (after_l || on_r) : ((after_l && before_r) || on_r)) return i;
    }
    return -1;
}

// Undirected id pairs of a graph.
inline std::set<std::pair<std::int64_t, std::int64_t>> id_edges(const SpannerGraph& g) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (auto [u, v] : g.edges()) out.insert({std::min(g.id(u), g.id(v)), std::max(g.id(u), g.id(v))});
    return out;
}

// Edges chosen by a plain scan: for every u and cone, the point minimizing key.
inline std::set<std::pair<std::int64_t, std::int64_t>> scan_edges(const PointSet& ps, const ConeSystem& cs,
                                                                   const std::vector<int>& cones,
                                                                   const std::function<double(int, Vec2, Vec2)>& key) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (std::size_t u = 0; u < ps.size(); ++u)
        for (int c : cones) {
            long best = -1;
            for (std::size_t v = 0; v < ps.size(); ++v) {
                if (u == v || cone_by_halfplanes(cs, ps[u].pos(), ps[v].pos()) != c) continue;
                const double kv = key(c, ps[u].pos(), ps[v].pos());
                if (best < 0) {
                    best = static_cast<long>(v);
                    continue;
                }
                const double kb = key(c, ps[u].pos(), ps[best].pos());
                if (kv < kb || (kv == kb && ps[v].id < ps[best].id)) best = static_cast<long>(v);
            }
            if (best >= 0) out.insert({std::min(ps[u].id, ps[best].id), std::max(ps[u].id, ps[best].id)});
        }
    return out;
}

// Bisector projection computed from the cone's own bisector vector.
inline double bisector_projection(const ConeSystem& cs, int c, Vec2 u, Vec2 v) { return dot(v - u, cs.bisector(c)); }

inline bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Length of the shortest path over all simple paths, by exhaustive DFS.
inline double all_paths_distance(const SpannerGraph& g, int u, int w) {
    double best = kInf;
    std::vector<char> on(g.n(), 0);
    std::function<void(int, double)> go = [&](int x, double len) {
        if (x == w) {
            best = std::min(best, len);
            return;
        }
        on[x] = 1;
        for (int y : g.neighbors(x))
            if (!on[y]) go(y, len + g.length(x, y));
        on[x] = 0;
    };
    go(u, 0);
    return best;
}

inline double all_paths_ratio(const SpannerGraph& g) {
    double r = 1;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) r = std::max(r, all_paths_distance(g, u, v) / g.length(u, v));
    return r;
}

}  // namespace support
