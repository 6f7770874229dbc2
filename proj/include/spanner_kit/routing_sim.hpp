#pragma once

#include "routing.hpp"

namespace spanner_kit {

namespace detail {

// Walks along s's canonical path in negative cone f.r. At path vertices s sits
// in the opposite cone; leaving past its ccw boundary heads toward the a side.
class X0Walker {
public:
    X0Walker(const SpannerGraph& g, int s, const NegativeFrame& f, int first, int last)
        : g_(g), s_(s), f_(f), c_(opposite_cone(f.r, 6)), first_(first), last_(last) {}

    bool in_x0(int x) const { return f_.in_x0(g_.pos(x)); }

    // Next path vertex toward the a side (toward_a) or the b side, or -1 at the path end.
    int next(int x, bool toward_a) const {
        if (x == (toward_a ? last_ : first_)) return -1;
        return side_neighbor(g_, x, c_, toward_a ? Side::ccw : Side::cw);
    }

    Move x0_any(int closest) const {
        Move m = direct_move(g_, s_, closest);
        if (in_x0(closest)) return m;
        const bool toward_a = !f_.on_a_side(g_.pos(closest));
        for (int x = closest, guard = 0; guard <= g_.n(); ++guard) {
            const int y = next(x, toward_a);
            if (y < 0) break;
            extend(m, y);
            if (in_x0(y)) return m;
            x = y;
        }
        throw InternalInvariantViolation("walk along the canonical path never entered X0");
    }

    // The X0 vertex of the path most extreme toward the preferred side.
    Move x0_toward(int closest, PreferredSide pref) const {
        const bool toward_a = pref == PreferredSide::x1;
        Move m = direct_move(g_, s_, closest);
        int x = closest;
        if (!in_x0(x)) {
            const bool away = f_.on_a_side(g_.pos(x)) == toward_a;
            for (int guard = 0; !in_x0(x); ++guard) {
                const int y = next(x, away ? !toward_a : toward_a);
                if (y < 0 || guard > g_.n()) throw InternalInvariantViolation("walk along the canonical path never entered X0");
                extend(m, y);
                x = y;
            }
            if (away) return m;
        }
        for (int guard = 0; guard <= g_.n(); ++guard) {
            const int y = next(x, toward_a);
            if (y < 0 || !in_x0(y)) break;
            extend(m, y);
            x = y;
        }
        return m;
    }

private:
    void extend(Move& m, int y) const {
        m.length += g_.length(m.hops.back(), y);
        m.hops.push_back(y);
        m.target = y;
    }

    const SpannerGraph& g_;
    int s_;
    const NegativeFrame& f_;
    int c_;
    int first_, last_;
};

// Does X0 hold a canonical-path vertex, judged from the path's end points only.
inline bool x0_from_ends(const NegativeFrame& f, Vec2 first, Vec2 last, bool same) {
    if (f.in_x0(first) || f.in_x0(last)) return true;
    if (same) return false;
    return !f.on_a_side(first) && f.on_a_side(last);
}

inline Move walk_to(const SpannerGraph& g, const std::vector<int>& hops, int w) {
    Move m{w, hops, 0, 0};
    m.hops.push_back(w);
    for (std::size_t i = 1; i < m.hops.size(); ++i) m.length += g.length(m.hops[i - 1], m.hops[i]);
    return m;
}

}  // namespace detail

// G12 keeps first, last and closest per negative cone; removed positive edges
// are found by exponential search along the far vertex's canonical path.
class G12Navigator {
public:
    explicit G12Navigator(const SpannerGraph& g) : g_(g) {}
    const SpannerGraph& graph() const { return g_; }

    std::optional<Move> positive(int s, int cone) const {
        double failed = 0;
        return search(s, cone, kInf, failed);
    }

    bool has_x0(int s, const NegativeFrame& f) const {
        const auto nb = neighbors_in_cone(g_, s, f.r);
        if (nb.empty()) return false;
        return detail::x0_from_ends(f, g_.pos(nb.front()), g_.pos(nb.back()), nb.front() == nb.back());
    }

    Move x0_any(int s, const NegativeFrame& f) const { return walker(s, f).x0_any(closest_neighbor_in_cone(g_, s, f.r)); }

    Move x0_toward(int s, const NegativeFrame& f, PreferredSide pref) const {
        return walker(s, f).x0_toward(closest_neighbor_in_cone(g_, s, f.r), pref);
    }

    std::optional<Move> probe(int s, const NegativeFrame& f, bool x1, bool capped, double& failed) const {
        const double cap = capped ? 2 * dist(g_.pos(s), f.corner(x1)) : kInf;
        auto m = search(s, f.side_cone(x1), cap, failed);
        if (m && !f.in_side(x1, g_.pos(m->target))) {
            failed += m->exploration + 2 * (m->length - g_.length(m->hops[m->hops.size() - 2], m->target));
            return std::nullopt;
        }
        return m;
    }

    double probe_allowance(const NegativeFrame& f, bool x1) const { return 20 * dist(f.s, f.corner(x1)); }

private:
    detail::X0Walker walker(int s, const NegativeFrame& f) const {
        const auto nb = neighbors_in_cone(g_, s, f.r);
        return detail::X0Walker(g_, s, f, nb.front(), nb.back());
    }

    // Doubling search in both directions for a vertex with an edge in `cone`.
    // Each round walks at most the budget, stopping early on success, and
    // returns to s on failure. Budgets never exceed cap.
    std::optional<Move> search(int s, int cone, double cap, double& failed) const {
        if (const int w = positive_neighbor(g_, s, cone); w >= 0) return direct_move(g_, s, w);
        const int nb[2] = {side_neighbor(g_, s, cone, Side::ccw), side_neighbor(g_, s, cone, Side::cw)};
        if (nb[0] < 0 && nb[1] < 0) return std::nullopt;
        int d = nb[1] < 0 || (nb[0] >= 0 && g_.length(s, nb[0]) <= g_.length(s, nb[1])) ? 0 : 1;
        double budget = g_.length(s, nb[d]);
        bool done[2] = {nb[0] < 0, nb[1] < 0};
        double explored = 0;
        for (int round = 0; round < 4 * 64 && !(done[0] && done[1]); ++round, d ^= 1, budget *= 2) {
            if (done[d]) continue;
            const double b = std::min(budget, cap);
            std::vector<int> hops{s};
            double walked = 0;
            int x = s;
            bool dead = false;
            for (int guard = 0; guard <= g_.n(); ++guard) {
                const int y = side_neighbor(g_, x, cone, d == 0 ? Side::ccw : Side::cw);
                if (y < 0 || std::find(hops.begin(), hops.end(), y) != hops.end()) {
                    dead = true;
                    break;
                }
                const double l = g_.length(x, y);
                if (walked + l > b + 1e-12) break;
                walked += l;
                x = y;
                hops.push_back(x);
                if (const int w = positive_neighbor(g_, x, cone); w >= 0) {
                    Move m = detail::walk_to(g_, hops, w);
                    m.exploration = explored;
                    return m;
                }
            }
            explored += 2 * walked;
            if (dead || b >= cap) done[d] = true;
        }
        failed += explored;
        return std::nullopt;
    }

    const SpannerGraph& g_;
};

// G9 keeps closest plus canonical-path edges; stored hints say which way to walk.
class G9Navigator {
public:
    explicit G9Navigator(const SpannerGraph& g) : g_(g) {}
    const SpannerGraph& graph() const { return g_; }

    std::optional<Move> positive(int s, int cone) const { return walk(s, cone, kInf).first; }

    bool has_x0(int s, const NegativeFrame& f) const {
        const auto& e = (*g_.hints())[s].path_ends[ConeIndex{f.r, 6}.triple()];
        if (!e) return false;
        return detail::x0_from_ends(f, e->first, e->last, e->first_id == e->last_id);
    }

    Move x0_any(int s, const NegativeFrame& f) const { return walker(s, f).x0_any(closest_neighbor_in_cone(g_, s, f.r)); }

    Move x0_toward(int s, const NegativeFrame& f, PreferredSide pref) const {
        return walker(s, f).x0_toward(closest_neighbor_in_cone(g_, s, f.r), pref);
    }

    std::optional<Move> probe(int s, const NegativeFrame& f, bool x1, bool capped, double& failed) const {
        const double cap = capped ? 2 * dist(g_.pos(s), f.corner(x1)) : kInf;
        auto [m, walked] = walk(s, f.side_cone(x1), cap);
        if (m && f.in_side(x1, g_.pos(m->target))) return m;
        failed += 2 * walked;
        return std::nullopt;
    }

    double probe_allowance(const NegativeFrame& f, bool x1) const { return 4 * dist(f.s, f.corner(x1)); }

private:
    detail::X0Walker walker(int s, const NegativeFrame& f) const {
        const auto& e = (*g_.hints())[s].path_ends[ConeIndex{f.r, 6}.triple()];
        if (!e) throw InternalInvariantViolation("X0 walk without stored path ends");
        return detail::X0Walker(g_, s, f, g_.points().index_of(e->first_id), g_.points().index_of(e->last_id));
    }

    // Follow the stored direction until a vertex has an edge in `cone`. Returns
    // the move (if found within cap) and the distance walked before the final edge.
    std::pair<std::optional<Move>, double> walk(int s, int cone, double cap) const {
        if (const int w = positive_neighbor(g_, s, cone); w >= 0) return {direct_move(g_, s, w), 0.0};
        const auto& bit = (*g_.hints())[s].toward_closest[ConeIndex{cone, 6}.triple()];
        if (!bit) return {std::nullopt, 0.0};
        std::vector<int> hops{s};
        double walked = 0;
        int x = s;
        for (int guard = 0; guard <= g_.n(); ++guard) {
            const int y = side_neighbor(g_, x, cone, *bit);
            if (y < 0 || std::find(hops.begin(), hops.end(), y) != hops.end()) break;
            const double l = g_.length(x, y);
            if (walked + l > cap + 1e-12) break;
            walked += l;
            x = y;
            hops.push_back(x);
            if (const int w = positive_neighbor(g_, x, cone); w >= 0) return {detail::walk_to(g_, hops, w), walked};
        }
        return {std::nullopt, walked};
    }

    const SpannerGraph& g_;
};

inline RoutingTrace route_g12(const SpannerGraph& g12, int s, int t) {
    if (g12.kind() != GraphKind::g12) throw InvalidParameter("expected a g12 graph, got " + to_string(g12.kind()));
    return route_stateful_with(G12Navigator(g12), s, t, "g12", 19.0);
}

inline RoutingTrace route_g9(const SpannerGraph& g9, int s, int t) {
    if (g9.kind() != GraphKind::g9) throw InvalidParameter("expected a g9 graph, got " + to_string(g9.kind()));
    if (!g9.hints() || static_cast<int>(g9.hints()->size()) != g9.n()) throw InvalidParameter("g9 graph carries no routing hints");
    return route_stateful_with(G9Navigator(g9), s, t, "g9", 3.0);
}

// Logical vertex sequence (one entry per simulated half-theta-6 step).
inline std::vector<std::int64_t> logical_sequence(const RoutingTrace& tr) {
    std::vector<std::int64_t> out{tr.source};
    for (const auto& st : tr.steps) out.push_back(st.to);
    return out;
}

}  // namespace spanner_kit
