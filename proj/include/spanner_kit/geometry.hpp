#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"

namespace spanner_kit {

inline constexpr double kEps = 1e-9;
inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
    double x = 0;
    double y = 0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(b - a); }
inline Vec2 unit(Vec2 a) { return (1.0 / norm(a)) * a; }

// Direction at clockwise angle phi from +y.
inline Vec2 direction(double phi) { return {std::sin(phi), std::cos(phi)}; }

inline double normalize_angle(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    if (a >= 2 * kPi) a -= 2 * kPi;
    return a;
}

// Clockwise angle of d measured from +y, in [0, 2pi).
inline double cw_angle(Vec2 d) { return normalize_angle(std::atan2(d.x, d.y)); }

struct Point {
    std::int64_t id = 0;
    double x = 0;
    double y = 0;

    Vec2 pos() const { return {x, y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
        for (const auto& p : pts_)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw DegenerateInput("point " + std::to_string(p.id) + " has a non-finite coordinate");
        std::vector<std::size_t> order(pts_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::pair(pts_[a].x, pts_[a].y) < std::pair(pts_[b].x, pts_[b].y);
        });
        for (std::size_t i = 1; i < order.size(); ++i) {
            const auto& p = pts_[order[i - 1]];
            const auto& q = pts_[order[i]];
            if (p.x == q.x && p.y == q.y)
                throw DegenerateInput("points " + std::to_string(p.id) + " and " + std::to_string(q.id) +
                                      " share coordinates");
        }
        std::vector<std::int64_t> ids;
        for (const auto& p : pts_) ids.push_back(p.id);
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw DegenerateInput("duplicate point id");
    }

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    // Index of the point with the given id, or -1.
    long index_of(std::int64_t id) const {
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (pts_[i].id == id) return static_cast<long>(i);
        return -1;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> pts_;
};

// k equiangular cones around every point. Cone 0 is centred on the direction
// at clockwise angle `rotation` from +y; labels increase clockwise.
struct ConeSystem {
    int k = 6;
    double rotation = 0;

    ConeSystem() = default;
    explicit ConeSystem(int k_, double rotation_ = 0) : k(k_), rotation(rotation_) {
        if (k < 2) throw InvalidParameter("cone count must be at least 2, got " + std::to_string(k));
    }

    double theta() const { return 2 * kPi / k; }
    double bisector_angle(int i) const { return rotation + i * theta(); }
    Vec2 bisector(int i) const { return direction(bisector_angle(i)); }
    // Counter-clockwise and clockwise boundary rays of cone i.
    double ccw_boundary_angle(int i) const { return bisector_angle(i) - theta() / 2; }
    double cw_boundary_angle(int i) const { return bisector_angle(i) + theta() / 2; }

    friend bool operator==(const ConeSystem&, const ConeSystem&) = default;
};

struct ConeIndex {
    int index = 0;
    int k = 0;

    // Half-theta-6 parity: raw cones 0, 2, 4 are positive.
    bool positive() const { return index % 2 == 0; }
    // Clockwise sequence C0+, C1-, C2+, C0-, C1+, C2-.
    int triple() const {
        static constexpr int kTriple[6] = {0, 1, 2, 0, 1, 2};
        return kTriple[index % 6];
    }
    friend bool operator==(const ConeIndex&, const ConeIndex&) = default;
};

// Raw index of the half-theta-6 cone with the given parity and triple index.
inline int half_theta6_raw(bool positive, int triple) {
    static constexpr int kPos[3] = {0, 4, 2};
    static constexpr int kNeg[3] = {3, 1, 5};
    return positive ? kPos[triple] : kNeg[triple];
}

inline int opposite_cone(int raw, int k) { return (raw + k / 2) % k; }

inline void require_distinct(Vec2 u, Vec2 v) {
    if (u == v) throw DegenerateInput("identical points");
}

inline int cone_of(const ConeSystem& cs, Vec2 u, Vec2 v) {
    require_distinct(u, v);
    const double th = cs.theta();
    const double rel = normalize_angle(cw_angle(v - u) - cs.rotation + th / 2);
    int j = static_cast<int>(std::floor(rel / th));
    const double frac = rel - j * th;
    // On (or within eps of) the ray between cone j-1 and cone j: ccw cone wins.
    if (frac <= kEps) j -= 1;
    return ((j % cs.k) + cs.k) % cs.k;
}

inline ConeIndex cone_index(const ConeSystem& cs, const Point& u, const Point& v) {
    return {cone_of(cs, u.pos(), v.pos()), cs.k};
}

inline double projection_in(const ConeSystem& cs, int cone, Vec2 u, Vec2 v) {
    return dot(v - u, cs.bisector(cone));
}

inline double theta_projection(const ConeSystem& cs, const Point& u, const Point& v) {
    const int c = cone_of(cs, u.pos(), v.pos());
    return projection_in(cs, c, u.pos(), v.pos());
}

inline double angle_alpha(const ConeSystem& cs, const Point& u, const Point& w) {
    const int c = cone_of(cs, u.pos(), w.pos());
    double d = std::abs(normalize_angle(cw_angle(w.pos() - u.pos()) - cs.bisector_angle(c) + kPi) - kPi);
    return std::min(d, cs.theta() / 2);
}

struct CanonicalTriangle {
    Vec2 apex;
    Vec2 target;
    ConeIndex cone;
    double bisector_angle = 0;
    double half_angle = 0;  // theta / 2
    double height = 0;      // |apex m|
    double size = 0;        // apex-incident side length

    Vec2 axis() const { return direction(bisector_angle); }
    // Unit vector along ab pointing from a to b (clockwise side).
    Vec2 across() const { return direction(bisector_angle + kPi / 2); }
    Vec2 midpoint_m() const { return apex + height * axis(); }
    Vec2 corner_a() const { return midpoint_m() - height * std::tan(half_angle) * across(); }
    Vec2 corner_b() const { return midpoint_m() + height * std::tan(half_angle) * across(); }
    // Point of ab on the bisector of angle(m, apex, b).
    Vec2 balance_x() const { return midpoint_m() + height * std::tan(half_angle / 2) * across(); }

    // Signed offsets of p: along the axis and across it (positive toward b).
    double along(Vec2 p) const { return dot(p - apex, axis()); }
    double lateral(Vec2 p) const { return dot(p - apex, across()); }

    // Closed membership with tolerance eps.
    bool contains(Vec2 p, double eps = kEps) const {
        const double h = along(p);
        if (h < -eps || h > height + eps) return false;
        return std::abs(lateral(p)) <= h * std::tan(half_angle) + eps;
    }
    // Open membership shrunk by eps.
    bool strictly_contains(Vec2 p, double eps = kEps) const {
        const double h = along(p);
        if (h <= eps || h >= height - eps) return false;
        return std::abs(lateral(p)) < h * std::tan(half_angle) - eps;
    }
};

inline CanonicalTriangle canonical_triangle_at(const ConeSystem& cs, int cone, Vec2 u, Vec2 w) {
    CanonicalTriangle t;
    t.apex = u;
    t.target = w;
    t.cone = {cone, cs.k};
    t.bisector_angle = cs.bisector_angle(cone);
    t.half_angle = cs.theta() / 2;
    t.height = projection_in(cs, cone, u, w);
    t.size = t.height / std::cos(t.half_angle);
    return t;
}

inline CanonicalTriangle canonical_triangle(const ConeSystem& cs, Vec2 u, Vec2 w) {
    return canonical_triangle_at(cs, cone_of(cs, u, w), u, w);
}

inline CanonicalTriangle canonical_triangle(const ConeSystem& cs, const Point& u, const Point& w) {
    return canonical_triangle(cs, u.pos(), w.pos());
}

// Is p inside the (closed) cone `cone` of apex u?
inline bool in_cone(const ConeSystem& cs, int cone, Vec2 u, Vec2 p) {
    return p != u && cone_of(cs, u, p) == cone;
}

struct GeneralPositionViolation {
    enum class Kind { equidistant, aligned };
    Kind kind;
    std::int64_t apex = -1;  // only for equidistant
    std::int64_t a = -1;
    std::int64_t b = -1;
};

namespace detail {

inline bool equidistant(double d1, double d2) {
    return std::abs(d1 - d2) <= kEps * std::max(1.0, std::max(d1, d2));
}

// Line directions (mod pi) that break general position: parallel or
// perpendicular to a cone boundary, or perpendicular to a bisector.
inline bool aligned(const ConeSystem& cs, Vec2 p, Vec2 q) {
    const double dir = std::fmod(cw_angle(q - p), kPi);
    auto hits = [&](double a) {
        double d = std::fmod(std::abs(dir - normalize_angle(a)), kPi);
        return std::min(d, kPi - d) <= kEps;
    };
    for (int i = 0; i < cs.k; ++i) {
        const double b = cs.ccw_boundary_angle(i);
        if (hits(b) || hits(b + kPi / 2) || hits(cs.bisector_angle(i) + kPi / 2)) return true;
    }
    return false;
}

}  // namespace detail

// Violations that involve point `idx` together with points [0, limit).
inline std::vector<GeneralPositionViolation> violations_involving(const std::vector<Point>& pts, std::size_t idx,
                                                                   std::size_t limit, const ConeSystem& cs) {
    std::vector<GeneralPositionViolation> out;
    const Vec2 p = pts[idx].pos();
    for (std::size_t j = 0; j < limit; ++j) {
        if (j == idx) continue;
        if (detail::aligned(cs, p, pts[j].pos()))
            out.push_back({GeneralPositionViolation::Kind::aligned, -1, pts[idx].id, pts[j].id});
    }
    // p as apex.
    for (std::size_t j = 0; j < limit; ++j)
        for (std::size_t l = j + 1; l < limit; ++l) {
            if (j == idx || l == idx) continue;
            if (detail::equidistant(dist(p, pts[j].pos()), dist(p, pts[l].pos())))
                out.push_back({GeneralPositionViolation::Kind::equidistant, pts[idx].id, pts[j].id, pts[l].id});
        }
    // p as one of the equidistant pair.
    for (std::size_t a = 0; a < limit; ++a) {
        if (a == idx) continue;
        const double dp = dist(pts[a].pos(), p);
        for (std::size_t j = 0; j < limit; ++j) {
            if (j == idx || j == a) continue;
            if (detail::equidistant(dp, dist(pts[a].pos(), pts[j].pos())))
                out.push_back({GeneralPositionViolation::Kind::equidistant, pts[a].id, pts[idx].id, pts[j].id});
        }
    }
    return out;
}

inline std::vector<GeneralPositionViolation> general_position_report(const PointSet& ps,
                                                                      const ConeSystem& cs = ConeSystem(6)) {
    std::vector<GeneralPositionViolation> out;
    const auto& pts = ps.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (detail::aligned(cs, pts[i].pos(), pts[j].pos()))
                out.push_back({GeneralPositionViolation::Kind::aligned, -1, pts[i].id, pts[j].id});
    std::vector<std::pair<double, std::size_t>> d;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        d.clear();
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != a) d.push_back({dist(pts[a].pos(), pts[j].pos()), j});
        std::sort(d.begin(), d.end());
        for (std::size_t j = 1; j < d.size(); ++j)
            if (detail::equidistant(d[j - 1].first, d[j].first))
                out.push_back({GeneralPositionViolation::Kind::equidistant, pts[a].id, pts[d[j - 1].second].id,
                               pts[d[j].second].id});
    }
    return out;
}

}  // namespace spanner_kit
