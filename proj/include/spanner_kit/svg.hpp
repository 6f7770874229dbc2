#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <utility>

#include "routing.hpp"

namespace spanner_kit {

struct SvgOptions {
    double width = 800;
    double margin = 20;
    // Draw the canonical triangle of this (source, target) pair of indices.
    std::optional<std::pair<int, int>> triangle_pair;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace detail

// Deterministic drawing of g, y axis pointing up. An overlay trace adds one
// highlighted polyline per routing step.
inline std::string render_svg(const SpannerGraph& g, const RoutingTrace* overlay = nullptr, const SvgOptions& opt = {}) {
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    std::vector<Vec2> extra;
    std::optional<CanonicalTriangle> tri;
    if (opt.triangle_pair) {
        auto [s, t] = *opt.triangle_pair;
        const auto& cs = g.cones();
        tri = cone_of(cs, g.pos(s), g.pos(t)) % 2 == 0 || g.kind() != GraphKind::half_theta6
                  ? canonical_triangle(cs, g.pos(s), g.pos(t))
                  : canonical_triangle(cs, g.pos(t), g.pos(s));
        extra = {tri->apex, tri->corner_a(), tri->corner_b()};
    }
    bool first = true;
    auto grow = [&](Vec2 p) {
        if (first) {
            minx = maxx = p.x;
            miny = maxy = p.y;
            first = false;
        }
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    };
    for (int v = 0; v < g.n(); ++v) grow(g.pos(v));
    for (auto p : extra) grow(p);
    const double span = std::max({maxx - minx, maxy - miny, 1e-12});
    const double scale = (opt.width - 2 * opt.margin) / span;
    const double height = (maxy - miny) * scale + 2 * opt.margin;
    auto X = [&](Vec2 p) { return detail::fmt(opt.margin + (p.x - minx) * scale); };
    auto Y = [&](Vec2 p) { return detail::fmt(height - opt.margin - (p.y - miny) * scale); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(opt.width) + "\" height=\"" + detail::fmt(height) +
           "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (tri) {
        out += "<polygon class=\"triangle\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\" points=\"";
        for (auto p : extra) out += X(p) + "," + Y(p) + " ";
        out.pop_back();
        out += "\"/>\n";
    }
    for (auto [u, v] : g.edges())
        out += "<line class=\"edge\" x1=\"" + X(g.pos(u)) + "\" y1=\"" + Y(g.pos(u)) + "\" x2=\"" + X(g.pos(v)) + "\" y2=\"" +
               Y(g.pos(v)) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    if (overlay)
        for (const auto& st : overlay->steps) {
            out += "<polyline class=\"route\" fill=\"none\" stroke=\"#d22\" stroke-width=\"3\" points=\"";
            for (auto id : st.hops) {
                const long i = g.points().index_of(id);
                if (i < 0) throw InvalidParameter("trace refers to unknown point id " + std::to_string(id));
                out += X(g.pos(i)) + "," + Y(g.pos(i)) + " ";
            }
            if (!st.hops.empty()) out.pop_back();
            out += "\"/>\n";
        }
    for (int v = 0; v < g.n(); ++v)
        out += "<circle class=\"vertex\" cx=\"" + X(g.pos(v)) + "\" cy=\"" + Y(g.pos(v)) + "\" r=\"3\" fill=\"black\"><title>" +
               std::to_string(g.id(v)) + "</title></circle>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace spanner_kit
