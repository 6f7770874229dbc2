#pragma once

#include <optional>
#include <string>

#include "build.hpp"

namespace spanner_kit {

struct PairRow {
    int u = -1;
    int v = -1;
    double graph_distance = 0;
    double euclidean = 0;
    double ratio = 0;
};

struct RatioReport {
    double max_ratio = 1;
    int witness_u = -1;
    int witness_v = -1;
    std::optional<std::vector<PairRow>> per_pair;
};

inline RatioReport spanning_ratio(const SpannerGraph& g, bool keep_pairs = false) {
    if (g.n() == 0) throw InvalidParameter("spanning ratio of an empty graph");
    RatioReport r;
    if (keep_pairs) r.per_pair.emplace();
    for (int u = 0; u < g.n(); ++u) {
        const auto d = dijkstra(g, u);
        for (int v = u + 1; v < g.n(); ++v) {
            const double e = g.length(u, v);
            const double ratio = d[v] / e;
            if (keep_pairs) r.per_pair->push_back({u, v, d[v], e, ratio});
            if (r.witness_u < 0 || ratio > r.max_ratio) {
                r.max_ratio = ratio;
                r.witness_u = u;
                r.witness_v = v;
            }
        }
    }
    return r;
}

enum class BoundFormula { yao_even, yao_odd, theta, theta5, half_theta6, half_theta6_alpha, rotated_union, g9_of_h };

inline std::string to_string(BoundFormula f) {
    switch (f) {
        case BoundFormula::yao_even: return "yao_even";
        case BoundFormula::yao_odd: return "yao_odd";
        case BoundFormula::theta: return "theta";
        case BoundFormula::theta5: return "theta5";
        case BoundFormula::half_theta6: return "half_theta6";
        case BoundFormula::half_theta6_alpha: return "half_theta6_alpha";
        case BoundFormula::rotated_union: return "rotated_union";
        case BoundFormula::g9_of_h: return "g9_of_h";
    }
    return "?";
}

inline BoundFormula bound_formula_from_string(const std::string& s) {
    for (auto f : {BoundFormula::yao_even, BoundFormula::yao_odd, BoundFormula::theta, BoundFormula::theta5,
                   BoundFormula::half_theta6, BoundFormula::half_theta6_alpha, BoundFormula::rotated_union,
                   BoundFormula::g9_of_h})
        if (to_string(f) == s) return f;
    throw InvalidParameter("unknown bound '" + s + "'");
}

struct BoundParams {
    int k = 6;
    int m = 1;
    double alpha = 0;
};

struct BoundSpec {
    BoundFormula formula;

    std::string name() const { return to_string(formula); }

    double value_at(const BoundParams& p) const {
        const double th = 2 * kPi / p.k;
        switch (formula) {
            case BoundFormula::yao_even:
            case BoundFormula::theta:
                if (p.k < 7) throw InvalidParameter(name() + " bound needs k >= 7");
                return 1 / (1 - 2 * std::sin(th / 2));
            case BoundFormula::yao_odd:
                if (p.k < 5 || p.k % 2 == 0) throw InvalidParameter("yao_odd bound needs odd k >= 5");
                return 1 / (1 - 2 * std::sin(3 * th / 8));
            case BoundFormula::theta5: return std::sqrt(50 + 22 * std::sqrt(5.0));
            case BoundFormula::half_theta6: return 2;
            case BoundFormula::half_theta6_alpha:
                if (p.alpha < -kEps || p.alpha > kPi / 6 + kEps) throw InvalidParameter("alpha outside [0, pi/6]");
                return std::sqrt(3.0) * std::cos(p.alpha) + std::sin(p.alpha);
            case BoundFormula::rotated_union:
                if (p.m < 1) throw InvalidParameter("rotated union needs m >= 1");
                return std::sqrt(3.0) * std::cos(kPi / (6 * p.m)) + std::sin(kPi / (6 * p.m));
            case BoundFormula::g9_of_h: return 3;
        }
        return kInf;
    }
};

// Ratio bounds for routing on half-theta-6 given alpha of the pair's canonical triangle.
inline double positive_routing_bound(double alpha) { return std::sqrt(3.0) * std::cos(alpha) + std::sin(alpha); }
inline double negative_routing_bound(double alpha) {
    return 5 / std::sqrt(3.0) * std::cos(alpha) - std::sin(alpha);
}

struct BoundReport {
    std::string name;
    double bound = 0;     // for per-pair bounds: the worst allowed value at the witness
    double measured = 0;  // ratio at the witness
    double slack = 0;     // min over checked pairs of bound - measured
    int witness_u = -1;
    int witness_v = -1;
    bool pass = false;
};

inline BoundSpec default_bound_for(const SpannerGraph& g) {
    switch (g.kind()) {
        case GraphKind::yao:
            if (g.k() >= 7) return {BoundFormula::yao_even};
            if (g.k() >= 5 && g.k() % 2 == 1) return {BoundFormula::yao_odd};
            break;
        case GraphKind::theta:
            if (g.k() >= 7) return {BoundFormula::theta};
            if (g.k() == 5) return {BoundFormula::theta5};
            break;
        case GraphKind::half_theta6: return {BoundFormula::half_theta6};
        case GraphKind::rotated_union: return {BoundFormula::rotated_union};
        case GraphKind::g9: return {BoundFormula::g9_of_h};
        default: break;
    }
    throw InvalidParameter("no proven bound for " + to_string(g.kind()) + " with k=" + std::to_string(g.k()));
}

inline BoundReport verify_bound(const SpannerGraph& g, const BoundSpec& spec, double tolerance = 1e-9) {
    auto inapplicable = [&] {
        throw InvalidParameter("bound " + spec.name() + " does not apply to " + to_string(g.kind()) +
                               " with k=" + std::to_string(g.k()));
    };
    BoundReport rep;
    rep.name = spec.name();
    const BoundParams params{g.k(), g.copies(), 0};
    switch (spec.formula) {
        case BoundFormula::yao_even:
        case BoundFormula::yao_odd:
            if (g.kind() != GraphKind::yao) inapplicable();
            break;
        case BoundFormula::theta:
            if (g.kind() != GraphKind::theta) inapplicable();
            break;
        case BoundFormula::theta5:
            if (g.kind() != GraphKind::theta || g.k() != 5) inapplicable();
            break;
        case BoundFormula::half_theta6:
        case BoundFormula::half_theta6_alpha:
            if (g.kind() != GraphKind::half_theta6) inapplicable();
            break;
        case BoundFormula::rotated_union:
            if (g.kind() != GraphKind::rotated_union) inapplicable();
            break;
        case BoundFormula::g9_of_h:
            if (g.kind() != GraphKind::g9) inapplicable();
            break;
    }
    if (spec.formula == BoundFormula::half_theta6_alpha || spec.formula == BoundFormula::g9_of_h) {
        // Pairwise bounds.
        std::optional<SpannerGraph> h;
        if (spec.formula == BoundFormula::g9_of_h) h = build_half_theta6(g.points());
        rep.slack = kInf;
        for (int u = 0; u < g.n(); ++u) {
            const auto d = dijkstra(g, u);
            std::vector<double> dh;
            if (h) dh = dijkstra(*h, u);
            for (int v = 0; v < g.n(); ++v) {
                if (v == u) continue;
                double bound, measured;
                if (h) {
                    if (v < u) continue;
                    bound = 3 * dh[v];
                    measured = d[v];
                } else {
                    if (!cone_index(g.cones(), g.points()[u], g.points()[v]).positive()) continue;
                    bound = spec.value_at({6, 1, angle_alpha(g.cones(), g.points()[u], g.points()[v])}) * g.length(u, v);
                    measured = d[v];
                }
                if (bound - measured < rep.slack) {
                    rep.slack = bound - measured;
                    rep.bound = bound / (h ? dh[v] : g.length(u, v));
                    rep.measured = measured / (h ? dh[v] : g.length(u, v));
                    rep.witness_u = u;
                    rep.witness_v = v;
                }
            }
        }
        if (g.n() < 2) rep.slack = 0;
        rep.pass = rep.slack >= -tolerance;
        return rep;
    }
    rep.bound = spec.value_at(params);
    const auto r = spanning_ratio(g);
    rep.measured = r.max_ratio;
    rep.witness_u = r.witness_u;
    rep.witness_v = r.witness_v;
    rep.slack = rep.bound - rep.measured;
    rep.pass = rep.measured <= rep.bound + tolerance;
    return rep;
}

struct RestrictedPairResult {
    std::vector<int> path;
    double length = 0;
    double bound = 0;  // (sqrt3 cos a + sin a) |uw|
    bool bound_ok = false;
};

// Shortest u-w path through vertices of T(u->w) only.
inline RestrictedPairResult restricted_pair_check(const SpannerGraph& h, int u, int w, double tolerance = 1e-9) {
    require_half_theta6(h);
    const auto& pu = h.points()[u];
    const auto& pw = h.points()[w];
    if (u == w || !cone_index(h.cones(), pu, pw).positive())
        throw InvalidParameter("restricted pair check needs w in a positive cone of u");
    const auto tri = canonical_triangle(h.cones(), pu, pw);
    std::vector<char> allowed(h.n(), 0);
    for (int v = 0; v < h.n(); ++v) allowed[v] = tri.contains(h.pos(v));
    allowed[u] = allowed[w] = 1;
    auto sp = shortest_path(h, u, w, &allowed);
    if (sp.vertices.empty()) throw InternalInvariantViolation("no path inside the canonical triangle");
    RestrictedPairResult r;
    r.path = std::move(sp.vertices);
    r.length = sp.length;
    r.bound = positive_routing_bound(angle_alpha(h.cones(), pu, pw)) * dist(pu.pos(), pw.pos());
    r.bound_ok = r.length <= r.bound + tolerance;
    return r;
}

struct ApproximationReport {
    std::size_t edges_checked = 0;
    double worst_total = 0;      // max of |approximation path| / |sv|
    double worst_canonical = 0;  // max of |canonical part| / |sv|
    int witness_s = -1;
    int witness_v = -1;
    bool pass = false;
};

// Approximation path of the h-edge (s, v), v in negative cone r of s:
// s, then s's closest vertex in that cone, then along the canonical path to v.
inline std::vector<int> approximation_path(const SpannerGraph& h, int s, int v) {
    const int r = cone_of(h.cones(), h.pos(s), h.pos(v));
    const auto info = canonical_path(h, s, r);
    const auto& p = info.path;
    const long i = std::find(p.begin(), p.end(), info.closest) - p.begin();
    const long j = std::find(p.begin(), p.end(), v) - p.begin();
    if (j == static_cast<long>(p.size())) throw InvalidParameter("v is not a neighbour of s in its cone");
    std::vector<int> out{s};
    const long step = j >= i ? 1 : -1;
    for (long x = i;; x += step) {
        out.push_back(p[x]);
        if (x == j) break;
    }
    return out;
}

inline ApproximationReport g9_approximation_check(const SpannerGraph& h, const SpannerGraph& g9, double tolerance = 1e-9) {
    require_half_theta6(h);
    if (g9.kind() != GraphKind::g9) throw InvalidParameter("expected a g9 graph");
    ApproximationReport rep;
    rep.pass = true;
    for (auto [a, b] : h.edges())
        for (auto [s, v] : {std::pair{a, b}, std::pair{b, a}}) {
            if (cone_index(h.cones(), h.points()[s], h.points()[v]).positive()) continue;
            const auto path = approximation_path(h, s, v);
            for (std::size_t i = 1; i < path.size(); ++i)
                if (!g9.has_edge(path[i - 1], path[i]))
                    throw InternalInvariantViolation("approximation path edge missing from g9");
            const double sv = h.length(s, v);
            const double total = path_length(h, path) / sv;
            const double canon = (path_length(h, path) - h.length(path[0], path[1])) / sv;
            ++rep.edges_checked;
            if (total > rep.worst_total) {
                rep.worst_total = total;
                rep.witness_s = s;
                rep.witness_v = v;
            }
            rep.worst_canonical = std::max(rep.worst_canonical, canon);
            if (total > 3 + tolerance || canon > 2 + tolerance) rep.pass = false;
        }
    return rep;
}

// Closed-form length of the worst approximation path, relative to |sv|, as a
// function of the wedge angle alpha in (0, pi/3].
inline double approximation_path_worst(double alpha) {
    return 2 / std::sqrt(3.0) * (std::sin(alpha + kPi / 3) + 2 * std::sin(alpha));
}

}  // namespace spanner_kit
