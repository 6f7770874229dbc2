#pragma once

#include <string>

#include "analysis.hpp"

namespace spanner_kit {

enum class CaseLabel { A, B, C, D, cal_A, cal_B, cal_C };

inline std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::A: return "A";
        case CaseLabel::B: return "B";
        case CaseLabel::C: return "C";
        case CaseLabel::D: return "D";
        case CaseLabel::cal_A: return "cal_A";
        case CaseLabel::cal_B: return "cal_B";
        case CaseLabel::cal_C: return "cal_C";
    }
    return "?";
}

inline CaseLabel case_label_from_string(const std::string& s) {
    for (auto c : {CaseLabel::A, CaseLabel::B, CaseLabel::C, CaseLabel::D, CaseLabel::cal_A, CaseLabel::cal_B,
                   CaseLabel::cal_C})
        if (to_string(c) == s) return c;
    throw InvalidParameter("unknown case label '" + s + "'");
}

enum class PreferredSide { nil, x1, x2 };

inline std::string to_string(PreferredSide p) {
    switch (p) {
        case PreferredSide::nil: return "nil";
        case PreferredSide::x1: return "X1";
        case PreferredSide::x2: return "X2";
    }
    return "?";
}

inline PreferredSide preferred_side_from_string(const std::string& s) {
    for (auto p : {PreferredSide::nil, PreferredSide::x1, PreferredSide::x2})
        if (to_string(p) == s) return p;
    throw InvalidParameter("unknown preferred side '" + s + "'");
}

// Regions of T(t->s) when t lies in negative cone r of s. X0 is the part in
// that cone, X1 the part in the positive cone clockwise of it (holding corner a,
// the counter-clockwise corner of T(t->s)) and X2 the part on the other side (corner b).
struct NegativeFrame {
    const ConeSystem* cs = nullptr;
    Vec2 s, t;
    int r = -1;
    int x1_cone = -1;
    int x2_cone = -1;
    CanonicalTriangle tri;
    Vec2 a, b;

    NegativeFrame(const ConeSystem& cones, Vec2 s_, Vec2 t_) : cs(&cones), s(s_), t(t_) {
        r = cone_of(cones, s, t);
        x1_cone = (r + 1) % 6;
        x2_cone = (r + 5) % 6;
        tri = canonical_triangle(cones, t, s);
        a = tri.corner_a();
        b = tri.corner_b();
    }

    bool in_region(int cone, Vec2 p) const { return p != s && cone_of(*cs, s, p) == cone && tri.contains(p); }
    bool in_x0(Vec2 p) const { return in_region(r, p); }
    bool in_x1(Vec2 p) const { return in_region(x1_cone, p); }
    bool in_x2(Vec2 p) const { return in_region(x2_cone, p); }
    bool in_side(bool x1, Vec2 p) const { return x1 ? in_x1(p) : in_x2(p); }
    int side_cone(bool x1) const { return x1 ? x1_cone : x2_cone; }
    Vec2 corner(bool x1) const { return x1 ? a : b; }
    double as() const { return dist(a, s); }
    double sb() const { return dist(s, b); }
    bool x1_is_smaller() const { return as() < sb(); }
    // Which side of X0 a point of the negative cone lies on (true: the a side).
    bool on_a_side(Vec2 p) const { return tri.lateral(p) < 0; }
};

struct PotentialValue {
    double vertical = 0;
    double horizontal = 0;
    double total = 0;
};

namespace detail {

inline bool positive_direction(const ConeSystem& cs, Vec2 s, Vec2 t) { return cone_of(cs, s, t) % 2 == 0; }

inline void require_routable(const SpannerGraph& g, int s, int t) {
    if (s < 0 || t < 0 || s >= g.n() || t >= g.n()) throw InvalidParameter("vertex out of range");
    if (s == t) throw AlreadyArrived("source equals destination");
}

inline PotentialValue make_potential(double v, double h) { return {v, h, v + h}; }

}  // namespace detail

// Is region X1 (x1 = true) or X2 of s empty, judged from s's single edge in that positive cone.
inline bool side_empty(const SpannerGraph& h, int s, const NegativeFrame& f, bool x1) {
    const int v = positive_neighbor(h, s, f.side_cone(x1));
    return v < 0 || !f.in_side(x1, h.pos(v));
}

inline CaseLabel classify_case(const SpannerGraph& h, int s, int t) {
    detail::require_routable(h, s, t);
    if (detail::positive_direction(h.cones(), h.pos(s), h.pos(t))) return CaseLabel::A;
    const NegativeFrame f(h.cones(), h.pos(s), h.pos(t));
    const bool e1 = side_empty(h, s, f, true), e2 = side_empty(h, s, f, false);
    if (e1 && e2) return CaseLabel::B;
    if (e1 || e2) return CaseLabel::C;
    return CaseLabel::D;
}

// Potential of the position (s, t) under a case label. For C (and cal_C) the
// anchor corner x is on the nonempty side; for cal_C that is the side opposite
// the preferred side.
inline PotentialValue potential(const SpannerGraph& h, int s, int t, CaseLabel label,
                                PreferredSide pref = PreferredSide::nil) {
    if (s == t) return {};
    const auto& cs = h.cones();
    const Vec2 ps = h.pos(s), pt = h.pos(t);
    const bool positive = detail::positive_direction(cs, ps, pt);
    if (label == CaseLabel::A || label == CaseLabel::cal_A) {
        if (!positive) throw InvalidParameter("case A needs t in a positive cone of s");
        const auto T = canonical_triangle(cs, ps, pt);
        const Vec2 a = T.corner_a(), b = T.corner_b();
        return detail::make_potential(dist(ps, a), std::max(dist(a, pt), dist(pt, b)));
    }
    if (positive) throw InvalidParameter("case " + to_string(label) + " needs t in a negative cone of s");
    const NegativeFrame f(cs, ps, pt);
    const double ta = f.tri.size;
    switch (label) {
        case CaseLabel::B:
            if (!side_empty(h, s, f, true) || !side_empty(h, s, f, false))
                throw InvalidParameter("case B needs both side regions empty");
            return detail::make_potential(ta, std::min(f.as(), f.sb()));
        case CaseLabel::C: {
            const bool e1 = side_empty(h, s, f, true), e2 = side_empty(h, s, f, false);
            if (e1 == e2) throw InvalidParameter("case C needs exactly one empty side region");
            return detail::make_potential(ta, dist(ps, e1 ? f.b : f.a));
        }
        case CaseLabel::cal_C:
            if (pref == PreferredSide::nil) throw InvalidParameter("case cal_C needs a preferred side");
            return detail::make_potential(ta, dist(ps, pref == PreferredSide::x1 ? f.b : f.a));
        case CaseLabel::D:
        case CaseLabel::cal_B: return detail::make_potential(ta, dist(f.a, f.b) + std::min(f.as(), f.sb()));
        default: break;
    }
    throw InvalidParameter("inapplicable case");
}

struct RoutingStep {
    std::int64_t from = -1;
    std::int64_t to = -1;
    CaseLabel label = CaseLabel::A;
    PreferredSide pref = PreferredSide::nil;  // state when the step was taken
    double phi_before = 0;
    double phi_after = 0;
    double length = 0;       // forward travel realizing the step
    double exploration = 0;  // abandoned search travel spent on this step
    double probe_cost = 0;   // failed side probe travel spent on this step
    std::vector<std::int64_t> hops;  // physical vertices walked, from..to
    friend bool operator==(const RoutingStep&, const RoutingStep&) = default;
};

struct RoutingTrace {
    std::string algo;
    std::int64_t source = -1;
    std::int64_t target = -1;
    std::vector<RoutingStep> steps;
    double total_path_length = 0;
    double exploration_travel = 0;  // searches plus failed probes
    double probe_allowance = 0;     // 20|as| (g12) or 4|as| (g9) when a probe failed
    double bound = 0;               // allowed total travel
    bool success = false;
    bool pass = false;
    friend bool operator==(const RoutingTrace&, const RoutingTrace&) = default;
};

// Ratio bound of the half-theta-6 routers for the pair (s, t).
inline double routing_bound(const SpannerGraph& h, int s, int t) {
    const auto& cs = h.cones();
    const auto& ps = h.points()[s];
    const auto& pt = h.points()[t];
    if (detail::positive_direction(cs, ps.pos(), pt.pos())) return positive_routing_bound(angle_alpha(cs, ps, pt));
    return negative_routing_bound(angle_alpha(cs, pt, ps));
}

namespace detail {

inline std::vector<int> x0_neighbors(const SpannerGraph& g, int s, const NegativeFrame& f) {
    std::vector<int> out;
    for (int v : neighbors_in_cone(g, s, f.r))
        if (f.in_x0(g.pos(v))) out.push_back(v);
    return out;
}

inline void finish(RoutingTrace& tr, double bound_ratio, double dst) {
    tr.total_path_length = 0;
    for (const auto& st : tr.steps) tr.total_path_length += st.length;
    tr.bound = bound_ratio * dst;
    tr.pass = tr.success && tr.total_path_length + tr.exploration_travel <= tr.bound + tr.probe_allowance + 1e-9;
}

}  // namespace detail

// Zero-memory router: the next hop depends only on s, t and s's neighbours.
inline RoutingTrace route_stateless(const SpannerGraph& h, int s, int t) {
    require_half_theta6(h);
    detail::require_routable(h, s, t);
    RoutingTrace tr;
    tr.algo = "stateless";
    tr.source = h.id(s);
    tr.target = h.id(t);
    std::vector<char> seen(h.n(), 0);
    int cur = s;
    seen[cur] = 1;
    while (cur != t) {
        const CaseLabel label = classify_case(h, cur, t);
        int next = -1;
        if (label == CaseLabel::A) {
            next = positive_neighbor(h, cur, cone_of(h.cones(), h.pos(cur), h.pos(t)));
        } else {
            const NegativeFrame f(h.cones(), h.pos(cur), h.pos(t));
            const auto x0 = detail::x0_neighbors(h, cur, f);
            const bool e1 = side_empty(h, cur, f, true);
            switch (label) {
                case CaseLabel::B:
                    if (!x0.empty()) next = f.as() >= f.sb() ? x0.back() : x0.front();
                    break;
                case CaseLabel::C:
                    if (!x0.empty()) next = e1 ? x0.back() : x0.front();
                    else next = positive_neighbor(h, cur, f.side_cone(!e1));
                    break;
                case CaseLabel::D:
                    if (!x0.empty()) next = x0.front();
                    else next = positive_neighbor(h, cur, f.side_cone(f.x1_is_smaller()));
                    break;
                default: break;
            }
        }
        if (next < 0) throw InternalInvariantViolation("router found no edge to follow at vertex " + std::to_string(h.id(cur)));
        if (seen[next]) throw InternalInvariantViolation("router revisited vertex " + std::to_string(h.id(next)));
        seen[next] = 1;
        RoutingStep st;
        st.from = h.id(cur);
        st.to = h.id(next);
        st.label = label;
        st.phi_before = potential(h, cur, t, label).total;
        st.phi_after = next == t ? 0 : potential(h, next, t, classify_case(h, next, t)).total;
        st.length = h.length(cur, next);
        st.hops = {st.from, st.to};
        tr.steps.push_back(st);
        cur = next;
    }
    tr.success = true;
    detail::finish(tr, routing_bound(h, s, t), h.length(s, t));
    return tr;
}

// One realized move of the stateful router.
struct Move {
    int target = -1;
    std::vector<int> hops;  // physical walk from the current vertex to target
    double length = 0;
    double exploration = 0;
};

inline Move direct_move(const SpannerGraph& g, int s, int v) { return {v, {s, v}, g.length(s, v), 0}; }

// Local knowledge of the half-theta-6 graph itself: every step is one edge.
class HalfThetaNavigator {
public:
    explicit HalfThetaNavigator(const SpannerGraph& h) : h_(h) {}
    const SpannerGraph& graph() const { return h_; }

    std::optional<Move> positive(int s, int cone) const {
        const int v = positive_neighbor(h_, s, cone);
        if (v < 0) return std::nullopt;
        return direct_move(h_, s, v);
    }

    bool has_x0(int s, const NegativeFrame& f) const { return !detail::x0_neighbors(h_, s, f).empty(); }

    // From the closest vertex of the cone, the nearest X0 vertex along the canonical path.
    Move x0_any(int s, const NegativeFrame& f) const {
        const auto path = neighbors_in_cone(h_, s, f.r);
        const int c = closest_neighbor_in_cone(h_, s, f.r);
        if (f.in_x0(h_.pos(c))) return direct_move(h_, s, c);
        const long i = std::find(path.begin(), path.end(), c) - path.begin();
        // The a side is the clockwise end of the path.
        const long step = f.on_a_side(h_.pos(c)) ? -1 : 1;
        for (long j = i; j >= 0 && j < static_cast<long>(path.size()); j += step)
            if (f.in_x0(h_.pos(path[j]))) return direct_move(h_, s, path[j]);
        throw InternalInvariantViolation("no X0 vertex along the canonical path");
    }

    // The X0 neighbour closest to the preferred side in cyclic order.
    Move x0_toward(int s, const NegativeFrame& f, PreferredSide pref) const {
        const auto x0 = detail::x0_neighbors(h_, s, f);
        return direct_move(h_, s, pref == PreferredSide::x1 ? x0.back() : x0.front());
    }

    // Edge into side region X1/X2 if s has one. Failed probes cost nothing here.
    std::optional<Move> probe(int s, const NegativeFrame& f, bool x1, bool /*capped*/, double& /*failed*/) const {
        const int v = positive_neighbor(h_, s, f.side_cone(x1));
        if (v < 0 || !f.in_side(x1, h_.pos(v))) return std::nullopt;
        return direct_move(h_, s, v);
    }

    double probe_allowance(const NegativeFrame&, bool) const { return 0; }

private:
    const SpannerGraph& h_;
};

// The region of v's frame lying inside T(s->v): the positive cone of v
// adjacent to both the negative cone holding t and the one holding s.
inline PreferredSide preferred_after_positive_step(const ConeSystem& cs, Vec2 s, Vec2 v, Vec2 t) {
    const NegativeFrame f(cs, v, t);
    const int rs = cone_of(cs, v, s);
    auto adjacent = [&](int pos) { return (pos + 1) % 6 == rs || (pos + 5) % 6 == rs; };
    if (adjacent(f.x1_cone)) return PreferredSide::x1;
    if (adjacent(f.x2_cone)) return PreferredSide::x2;
    throw InternalInvariantViolation("no side region adjacent to the incoming edge");
}

// Constant-memory router carrying a preferred side. The navigator decides how
// each half-theta-6 step is realized.
template <class Navigator>
RoutingTrace route_stateful_with(const Navigator& nav, int s, int t, const std::string& algo, double travel_factor) {
    const SpannerGraph& g = nav.graph();
    detail::require_routable(g, s, t);
    const auto& cs = g.cones();
    RoutingTrace tr;
    tr.algo = algo;
    tr.source = g.id(s);
    tr.target = g.id(t);
    PreferredSide pref = PreferredSide::nil;
    auto label_of = [&](int x) {
        if (detail::positive_direction(cs, g.pos(x), g.pos(t))) return CaseLabel::cal_A;
        return pref == PreferredSide::nil ? CaseLabel::cal_B : CaseLabel::cal_C;
    };
    auto phi = [&](int x, CaseLabel l) { return x == t ? 0.0 : potential(g, x, t, l, pref).total; };
    auto need = [&](std::optional<Move> m, const char* what) {
        if (!m) throw InternalInvariantViolation(std::string("stateful router: ") + what);
        return *m;
    };
    std::vector<char> seen(g.n(), 0);
    int cur = s;
    seen[cur] = 1;
    bool probe_charged = false;
    while (cur != t) {
        const CaseLabel label = label_of(cur);
        RoutingStep st;
        st.from = g.id(cur);
        st.label = label;
        st.pref = pref;
        st.phi_before = phi(cur, label);
        Move mv;
        double failed = 0;
        if (label == CaseLabel::cal_A) {
            mv = need(nav.positive(cur, cone_of(cs, g.pos(cur), g.pos(t))), "missing positive edge");
            if (mv.target != t && !detail::positive_direction(cs, g.pos(mv.target), g.pos(t)))
                pref = preferred_after_positive_step(cs, g.pos(cur), g.pos(mv.target), g.pos(t));
        } else {
            const NegativeFrame f(cs, g.pos(cur), g.pos(t));
            if (label == CaseLabel::cal_B) {
                if (nav.has_x0(cur, f)) {
                    mv = nav.x0_any(cur, f);
                } else {
                    const bool small = f.x1_is_smaller();
                    auto m = nav.probe(cur, f, small, true, failed);
                    if (m) {
                        mv = *m;
                    } else {
                        if (failed > 0 && !probe_charged) {
                            tr.probe_allowance += nav.probe_allowance(f, small);
                            probe_charged = true;
                        }
                        double unused = 0;
                        mv = need(nav.probe(cur, f, !small, false, unused), "both side regions empty");
                        pref = small ? PreferredSide::x1 : PreferredSide::x2;
                    }
                }
            } else {
                if (nav.has_x0(cur, f)) {
                    mv = nav.x0_toward(cur, f, pref);
                } else {
                    double unused = 0;
                    mv = need(nav.probe(cur, f, pref != PreferredSide::x1, false, unused), "non-preferred side empty");
                }
            }
        }
        if (seen[mv.target]) throw InternalInvariantViolation("router revisited vertex " + std::to_string(g.id(mv.target)));
        seen[mv.target] = 1;
        st.to = g.id(mv.target);
        st.length = mv.length;
        st.exploration = mv.exploration;
        st.probe_cost = failed;
        for (int x : mv.hops) st.hops.push_back(g.id(x));
        st.phi_after = phi(mv.target, mv.target == t ? label : label_of(mv.target));
        tr.exploration_travel += mv.exploration + failed;
        tr.steps.push_back(std::move(st));
        cur = mv.target;
    }
    tr.success = true;
    detail::finish(tr, travel_factor * routing_bound(g, s, t), g.length(s, t));
    return tr;
}

inline RoutingTrace route_stateful(const SpannerGraph& h, int s, int t) {
    require_half_theta6(h);
    return route_stateful_with(HalfThetaNavigator(h), s, t, "stateful", 1.0);
}

}  // namespace spanner_kit
