#pragma once

#include <optional>

#include "build.hpp"

namespace spanner_kit {

// 2(2 + sqrt 5): the witness path is at most this many canonical-triangle sizes long.
inline const double kTheta5PathConstant = 2 * (2 + std::sqrt(5.0));

namespace detail {

class Theta5Witness {
public:
    explicit Theta5Witness(const SpannerGraph& g) : g_(g), cs_(g.cones()) {
        limit_ = static_cast<long>(g.n()) * (g.n() - 1) / 2 + 2;
    }

    std::vector<int> path(int u, int w, long depth = 0) {
        if (depth > limit_) throw InternalInvariantViolation("witness recursion did not shrink");
        if (g_.has_edge(u, w)) return {u, w};
        const auto T = canonical_triangle(cs_, g_.pos(u), g_.pos(w));
        const double lat = T.lateral(g_.pos(w));
        // Inside the central strip T(w->u) is the smaller triangle.
        if (std::abs(lat) < T.height * std::tan(T.half_angle / 2)) return reversed(path(w, u, depth + 1));

        Frame f{T.cone.index, lat < 0};
        const int vw = closest(w, cone_of(cs_, g_.pos(w), g_.pos(u)));
        const int r = f.rel(cs_, g_.pos(u), g_.pos(vw));
        if (r == 0 || r == 1 || r == 2) return append(path(u, vw, depth + 1), w);
        if (r != 4) throw InternalInvariantViolation("closest vertex toward u lies beyond u");

        const Vec2 corner = f.mirror ? T.corner_a() : T.corner_b();
        if (f.rel(cs_, corner, g_.pos(vw)) == 3) return append(path(u, vw, depth + 1), w);

        const int vu = closest(u, T.cone.index);
        const int r1 = f.rel(cs_, g_.pos(vu), g_.pos(w));
        if (r1 == 4 || r1 == 0) return prepend(u, path(vu, w, depth + 1));
        const int r2 = f.rel(cs_, g_.pos(w), g_.pos(vu));
        if (r1 == 1 && r2 == 3) return prepend(u, append(path(vu, vw, depth + 1), w));
        if (r1 == 1 && r2 == 4) {
            const double small = canonical_triangle(cs_, g_.pos(w), g_.pos(vu)).size;
            if (small <= (kTheta5PathConstant - 1) / kTheta5PathConstant * T.size)
                return prepend(u, reversed(path(w, vu, depth + 1)));
            return prepend(u, append(reversed(path(vw, vu, depth + 1)), w));
        }
        throw InternalInvariantViolation("witness case analysis fell through");
    }

private:
    // Cone labels relative to the cone of u holding w, mirrored when w is in its left half.
    struct Frame {
        int base;
        bool mirror;
        int rel(const ConeSystem& cs, Vec2 apex, Vec2 p) const {
            int r = ((cone_of(cs, apex, p) - base) % 5 + 5) % 5;
            return mirror ? (5 - r) % 5 : r;
        }
    };

    int closest(int x, int cone) const {
        int best = -1;
        double bv = kInf;
        for (int v = 0; v < g_.n(); ++v) {
            if (v == x || cone_of(cs_, g_.pos(x), g_.pos(v)) != cone) continue;
            const double p = projection_in(cs_, cone, g_.pos(x), g_.pos(v));
            if (best < 0 || p < bv || (p == bv && g_.id(v) < g_.id(best))) {
                best = v;
                bv = p;
            }
        }
        return best;
    }

    static std::vector<int> reversed(std::vector<int> p) {
        std::reverse(p.begin(), p.end());
        return p;
    }
    static std::vector<int> append(std::vector<int> p, int v) {
        p.push_back(v);
        return p;
    }
    static std::vector<int> prepend(int v, std::vector<int> p) {
        p.insert(p.begin(), v);
        return p;
    }

    const SpannerGraph& g_;
    ConeSystem cs_;
    long limit_;
};

}  // namespace detail

// Constructive u-w path following the five-cone case analysis; it may cross
// itself and is not necessarily shortest.
inline std::vector<int> theta5_witness_path(const SpannerGraph& g, int u, int w) {
    if (g.kind() != GraphKind::theta || g.k() != 5) throw InvalidParameter("witness path needs a theta graph with k=5");
    if (u == w) throw DegenerateInput("witness path endpoints coincide");
    return detail::Theta5Witness(g).path(u, w);
}

struct Theta5Step {
    int number = 0;
    std::vector<std::int64_t> added;        // ids placed in this step
    std::vector<std::int64_t> stated_path;  // shortest v1-v2 path after this step
};

struct Theta5LowerBound {
    PointSet points;  // ids 1..31 match the vertex names v1..v31
    std::vector<Theta5Step> steps;
    double delta = 0;

    // Points present after the given step.
    PointSet prefix(int step) const {
        std::size_t count = 0;
        for (const auto& s : steps) {
            count += s.added.size();
            if (s.number == step) break;
        }
        return PointSet(std::vector<Point>(points.begin(), points.begin() + count));
    }
};

namespace detail {

// Corner of T(p->q) on the given side, pulled delta inside along its angle bisector.
inline Vec2 near_corner(const ConeSystem& cs, Vec2 p, Vec2 q, Side side, double delta) {
    const auto T = canonical_triangle(cs, p, q);
    const Vec2 c = side == Side::ccw ? T.corner_a() : T.corner_b();
    const Vec2 o = side == Side::ccw ? T.corner_b() : T.corner_a();
    return c + delta * unit(unit(p - c) + unit(o - c));
}

inline Vec2 intersect_lines(Vec2 p, Vec2 d, Vec2 q, Vec2 e) {
    const double t = cross(q - p, e) / cross(d, e);
    return p + t * d;
}

// Crossing of the boundaries of T(p->q) and T(q->p) other than p and q,
// moved delta toward the midpoint of pq so that it lies inside both.
inline Vec2 near_crossing(const ConeSystem& cs, Vec2 p, Vec2 q, double delta) {
    const auto T1 = canonical_triangle(cs, p, q);
    const auto T2 = canonical_triangle(cs, q, p);
    const std::array<Vec2, 3> a{T1.apex, T1.corner_a(), T1.corner_b()};
    const std::array<Vec2, 3> b{T2.apex, T2.corner_a(), T2.corner_b()};
    std::optional<Vec2> best;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Vec2 s0 = a[i], s1 = a[(i + 1) % 3], t0 = b[j], t1 = b[(j + 1) % 3];
            const double den = cross(s1 - s0, t1 - t0);
            if (std::abs(den) < 1e-15) continue;
            const double x = cross(t0 - s0, t1 - t0) / den;
            const double y = cross(t0 - s0, s1 - s0) / den;
            if (x < -1e-12 || x > 1 + 1e-12 || y < -1e-12 || y > 1 + 1e-12) continue;
            const Vec2 X = s0 + x * (s1 - s0);
            if (dist(X, p) < 1e-9 || dist(X, q) < 1e-9) continue;
            // The crossing farthest from the segment pq.
            if (!best || std::abs(cross(q - p, X - p)) > std::abs(cross(q - p, *best - p))) best = X;
        }
    if (!best) throw InternalInvariantViolation("canonical triangles do not cross");
    return *best + delta * unit(0.5 * (p + q) - *best);
}

}  // namespace detail

// The 31-vertex five-cone configuration whose v1-v2 shortest path approaches
// (11 sqrt5 - 17)/2 times |v1 v2|. Every "arbitrarily close" placement is realized by delta.
inline Theta5LowerBound theta5_lower_bound_construction(double delta = 1e-4) {
    if (!(delta > 0 && delta < 0.01)) throw InvalidParameter("delta must lie in (0, 0.01)");
    const ConeSystem cs(5);
    std::vector<Vec2> v(32);  // v[1..31]
    Theta5LowerBound out;
    out.delta = delta;
    std::vector<Point> pts;
    auto place = [&](int i, Vec2 p) {
        v[i] = p;
        pts.push_back({i, p.x, p.y});
    };
    auto step = [&](int number, std::vector<std::int64_t> added, std::vector<std::int64_t> path) {
        out.steps.push_back({number, std::move(added), std::move(path)});
    };
    using detail::near_corner;
    const auto ccw = Side::ccw, cw = Side::cw;

    place(1, {0, 0});
    step(1, {1}, {1});
    {
        // Near the top right corner of a unit triangle in C0 of v1.
        const auto T = canonical_triangle_at(cs, 0, v[1], Vec2{0, std::cos(kPi / 5)});
        place(2, T.corner_b() + delta * unit(unit(v[1] - T.corner_b()) + unit(T.corner_a() - T.corner_b())));
    }
    step(2, {2}, {1, 2});
    auto pair_step = [&](int number, int i, int p, int q, Side s1, int j, Side s2, std::vector<std::int64_t> path) {
        const Vec2 a = near_corner(cs, v[p], v[q], s1, delta);
        const Vec2 b = near_corner(cs, v[q], v[p], s2, delta);
        place(i, a);
        place(j, b);
        step(number, {i, j}, std::move(path));
    };
    pair_step(3, 3, 1, 2, ccw, 4, ccw, {1, 4, 2});
    pair_step(4, 5, 1, 4, cw, 6, ccw, {1, 3, 2});
    pair_step(5, 7, 2, 3, cw, 8, ccw, {1, 6, 4, 2});
    pair_step(6, 9, 1, 6, cw, 10, ccw, {1, 5, 4, 2});
    pair_step(7, 11, 4, 5, ccw, 12, cw, {1, 5, 6, 4, 2});
    pair_step(8, 13, 5, 6, ccw, 14, cw, {1, 5, 14, 6, 4, 2});
    pair_step(9, 15, 5, 14, ccw, 16, cw, {1, 5, 13, 6, 4, 2});
    pair_step(10, 17, 6, 13, cw, 18, ccw, {1, 3, 8, 2});
    place(19, detail::near_crossing(cs, v[2], v[8], delta));
    step(11, {19}, {1, 3, 7, 2});
    pair_step(12, 20, 3, 7, ccw, 21, cw, {1, 5, 12, 2});
    place(22, near_corner(cs, v[2], v[12], ccw, delta));
    step(13, {22}, {1, 10, 6, 4, 2});
    {
        // On the upper boundary of C1 at v10, with v1 just inside the lower boundary of C1 seen from it.
        const Vec2 d1 = direction(cs.ccw_boundary_angle(1) + delta);
        const Vec2 d2 = direction(cs.cw_boundary_angle(1) - delta + kPi);
        place(23, detail::intersect_lines(v[10], d1, v[1], d2));
    }
    step(14, {23}, {1, 5, 12, 4, 2});
    pair_step(15, 24, 4, 12, ccw, 25, cw, {1, 5, 13, 14, 6, 4, 2});
    pair_step(16, 26, 13, 14, cw, 27, ccw, {1, 9, 18, 6, 4, 2});
    pair_step(17, 28, 9, 18, cw, 29, ccw, {1, 5, 16, 11, 4, 2});
    pair_step(18, 30, 11, 16, ccw, 31, cw, {1, 23, 10, 6, 4, 2});
    out.points = PointSet(std::move(pts));
    return out;
}

inline PointSet gen_theta5_lower_bound(double delta = 1e-4) { return theta5_lower_bound_construction(delta).points; }

// Shortest v1-v2 path (as ids) in the five-cone graph on the points present after `step`.
inline std::vector<std::int64_t> theta5_replay_path(const Theta5LowerBound& lb, int step) {
    const auto g = build_theta(lb.prefix(step), 5);
    const auto sp = shortest_path(g, g.points().index_of(1), g.points().index_of(2));
    std::vector<std::int64_t> ids;
    for (int x : sp.vertices) ids.push_back(g.id(x));
    return ids;
}

}  // namespace spanner_kit
