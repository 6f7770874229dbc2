#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "geometry.hpp"

namespace spanner_kit {

struct RunConfig {
    std::uint64_t seed = 1;
    int n = 32;
    int k = 6;
    double bbox = 1.0;
    double tolerance = 1e-9;
};

namespace detail {

inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

// Uniform points in [0, bbox]^2; a point is redrawn while it breaks general
// position with respect to the points placed before it.
inline PointSet gen_random(const RunConfig& cfg) {
    if (cfg.n < 1) throw InvalidParameter("n must be at least 1");
    if (!(cfg.bbox > 0)) throw InvalidParameter("bbox must be positive");
    const ConeSystem cs(cfg.k);
    std::mt19937_64 rng(cfg.seed);
    std::vector<Point> pts;
    for (int i = 0; i < cfg.n; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt <= 100 && !placed; ++attempt) {
            const double x = cfg.bbox * detail::uniform01(rng);
            const double y = cfg.bbox * detail::uniform01(rng);
            pts.push_back({i, x, y});
            bool clash = false;
            for (int j = 0; j < i && !clash; ++j) clash = pts[j].x == x && pts[j].y == y;
            if (!clash && violations_involving(pts, i, pts.size(), cs).empty()) placed = true;
            else pts.pop_back();
        }
        if (!placed) throw DegenerateInput("could not place point " + std::to_string(i) + " in general position");
    }
    return PointSet(std::move(pts));
}

inline PointSet gen_circle(int n, double radius = 1.0) {
    if (n < 3) throw InvalidParameter("circle needs n >= 3");
    if (!(radius > 0)) throw InvalidParameter("radius must be positive");
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        const double a = 2 * kPi * i / n;
        pts.push_back({i, radius * std::cos(a), radius * std::sin(a)});
    }
    return PointSet(std::move(pts));
}

enum class RoutingInstance { positive, negative_a, negative_b };

inline std::string to_string(RoutingInstance r) {
    switch (r) {
        case RoutingInstance::positive: return "positive";
        case RoutingInstance::negative_a: return "negative_a";
        case RoutingInstance::negative_b: return "negative_b";
    }
    return "?";
}

inline RoutingInstance routing_instance_from_string(const std::string& s) {
    for (auto r : {RoutingInstance::positive, RoutingInstance::negative_a, RoutingInstance::negative_b})
        if (to_string(r) == s) return r;
    throw InvalidParameter("unknown routing instance '" + s + "'");
}

// Corner gadgets around T(u->w) with side 1, u = id 0 at the origin, w = id 1
// on the top side at angle alpha clockwise of the bisector.
//   positive:   id 2 just inside the upper-left corner a.
//   negative_a: id 2 near b, id 3 near a and lower, so from b the way down runs through a.
//   negative_b: as negative_a plus id 4 just below id 2, which opens a short way down from b.
inline PointSet gen_routing_lb(RoutingInstance kind, double alpha, double nudge = 1e-4) {
    if (!(alpha >= 0 && alpha <= kPi / 6)) throw InvalidParameter("alpha must lie in [0, pi/6]");
    if (!(nudge > 0 && nudge < 0.01)) throw InvalidParameter("nudge must lie in (0, 0.01)");
    const double h = std::sqrt(3.0) / 2;
    const Vec2 u{0, 0}, a{-0.5, h}, b{0.5, h};
    const Vec2 w{h * std::tan(alpha), h};
    const Vec2 in_a = unit(0.5 * (u + b) - a);
    const Vec2 in_b = unit(0.5 * (u + a) - b);
    std::vector<Point> pts{{0, u.x, u.y}, {1, w.x, w.y}};
    auto add = [&](Vec2 p) { pts.push_back({static_cast<std::int64_t>(pts.size()), p.x, p.y}); };
    if (kind == RoutingInstance::positive) {
        add(a + nudge * in_a);
    } else {
        const Vec2 pb = b + nudge * in_b;
        add(pb);
        add(a + 2 * nudge * in_a);
        // Slightly left of straight down keeps it inside the cone of u.
        if (kind == RoutingInstance::negative_b) add(pb + 2 * nudge * direction(kPi * 205 / 180));
    }
    return PointSet(std::move(pts));
}

}  // namespace spanner_kit
