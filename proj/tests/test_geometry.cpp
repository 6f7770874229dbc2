#include <gtest/gtest.h>

#include <random>

#include "spanner_kit/geometry.hpp"

using namespace spanner_kit;

namespace {

Point P(double x, double y, std::int64_t id = 0) { return {id, x, y}; }

// Cone membership from half-plane tests against the two boundary rays.
int cone_by_halfplanes(const ConeSystem& cs, Vec2 v) {
    for (int i = 0; i < cs.k; ++i) {
        const Vec2 l = direction(cs.ccw_boundary_angle(i));
        const Vec2 r = direction(cs.cw_boundary_angle(i));
        const bool after_l = cross(l, v) < 0;
        const bool before_r = cross(v, r) < 0;
        const bool on_r = std::abs(cross(v, r)) < 1e-15 && dot(v, r) > 0;
        if ((after_l && before_r) || on_r) return i;
    }
    return -1;
}

}  // namespace

TEST(ConeIndex, BisectorOfC0) { EXPECT_EQ(cone_index(ConeSystem(5), P(0, 0), P(0, 1)).index, 0); }

TEST(ConeIndex, BoundaryGoesToCounterClockwiseCone) {
    const ConeSystem cs(5);
    const Vec2 v = direction(cs.theta() / 2);
    EXPECT_EQ(cone_index(cs, P(0, 0), P(v.x, v.y)).index, 0);
    const Vec2 w = direction(-cs.theta() / 2);
    EXPECT_EQ(cone_index(cs, P(0, 0), P(w.x, w.y)).index, 4);
}

TEST(ConeIndex, PlusXIsC1ForFourCones) { EXPECT_EQ(cone_index(ConeSystem(4), P(0, 0), P(1, 0)).index, 1); }

TEST(ConeIndex, IdenticalPointsRejected) {
    EXPECT_THROW(cone_index(ConeSystem(6), P(1, 1), P(1, 1)), DegenerateInput);
}

TEST(ConeIndex, MatchesHalfPlaneOracle) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k : {3, 4, 5, 6, 7, 9, 12})
        for (int it = 0; it < 2000; ++it) {
            const ConeSystem cs(k);
            const Vec2 v{U(rng), U(rng)};
            EXPECT_EQ(cone_of(cs, {0, 0}, v), cone_by_halfplanes(cs, v)) << k;
        }
}

TEST(ConeIndex, HalfTheta6Labels) {
    // Clockwise sequence C0+, C1-, C2+, C0-, C1+, C2-.
    const bool pos[6] = {true, false, true, false, true, false};
    const int tri[6] = {0, 1, 2, 0, 1, 2};
    for (int i = 0; i < 6; ++i) {
        ConeIndex c{i, 6};
        EXPECT_EQ(c.positive(), pos[i]);
        EXPECT_EQ(c.triple(), tri[i]);
        EXPECT_EQ(half_theta6_raw(c.positive(), c.triple()), i);
    }
    for (int t = 0; t < 3; ++t) EXPECT_EQ(opposite_cone(half_theta6_raw(true, t), 6), half_theta6_raw(false, t));
}

TEST(ConeIndex, ExactlyOneEndpointSeesTheOtherPositively) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1, 1);
    const ConeSystem cs(6);
    for (int it = 0; it < 2000; ++it) {
        const Point u = P(U(rng), U(rng)), v = P(U(rng), U(rng));
        const bool a = cone_index(cs, u, v).positive(), b = cone_index(cs, v, u).positive();
        EXPECT_NE(a, b);
    }
}

TEST(Projection, Examples) {
    const ConeSystem cs6(6);
    EXPECT_NEAR(theta_projection(cs6, P(0, 0), P(0.5, 1)), 1.0, 1e-12);
    EXPECT_NEAR(theta_projection(cs6, P(0, 0), P(0, 2.5)), 2.5, 1e-12);
    const ConeSystem cs5(5);
    const Vec2 b = 3.0 * direction(cs5.theta() / 2);
    EXPECT_NEAR(theta_projection(cs5, P(0, 0), P(b.x, b.y)), 3 * std::cos(cs5.theta() / 2), 1e-12);
}

TEST(Projection, NeverExceedsDistance) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k : {4, 5, 6, 8}) {
        const ConeSystem cs(k);
        for (int it = 0; it < 500; ++it) {
            const Point u = P(U(rng), U(rng)), v = P(U(rng), U(rng));
            const double p = theta_projection(cs, u, v);
            EXPECT_GT(p, 0);
            EXPECT_LE(p, dist(u.pos(), v.pos()) + 1e-15);
        }
    }
}

TEST(CanonicalTriangle, SizeOnBisector) {
    auto t = canonical_triangle(ConeSystem(6), P(0, 0), P(0, 1));
    EXPECT_NEAR(t.size, 1 / std::cos(kPi / 6), 1e-12);
    EXPECT_NEAR(dist(t.apex, t.corner_a()), t.size, 1e-12);
    EXPECT_NEAR(dist(t.apex, t.corner_b()), t.size, 1e-12);
    // Counter-clockwise corner is on the left for C0.
    EXPECT_LT(t.corner_a().x, 0);
    EXPECT_GT(t.corner_b().x, 0);
}

TEST(CanonicalTriangle, TargetOnRightBoundaryIsCornerB) {
    const ConeSystem cs(6);
    const Vec2 w = 2.0 * direction(kPi / 6 - 1e-12);
    auto t = canonical_triangle(cs, P(0, 0), P(w.x, w.y));
    EXPECT_NEAR(dist(t.corner_b(), w), 0, 1e-9);
}

TEST(CanonicalTriangle, BalancePointEqualizesBothTriangles) {
    for (int k : {5, 6, 7}) {
        const ConeSystem cs(k);
        const auto big = canonical_triangle(cs, Vec2{0, 0}, Vec2{0.1, 1});
        const Vec2 x = big.balance_x();
        const auto fwd = canonical_triangle(cs, Vec2{0, 0}, x);
        const auto back = canonical_triangle(cs, x, Vec2{0, 0});
        EXPECT_NEAR(fwd.size, back.size, 1e-9) << k;
    }
}

TEST(CanonicalTriangle, TargetOnFarSideAndDiameter) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k : {5, 6, 7}) {
        const ConeSystem cs(k);
        for (int it = 0; it < 300; ++it) {
            const Vec2 u{U(rng), U(rng)}, w{U(rng), U(rng)};
            auto t = canonical_triangle(cs, u, w);
            EXPECT_NEAR(cross(t.corner_b() - t.corner_a(), w - t.corner_a()), 0, 1e-9);
            EXPECT_GE(t.size, dist(u, w) * std::cos(cs.theta() / 2) - 1e-12);
            EXPECT_LE(dist(u, w), t.size + 1e-12);
            EXPECT_TRUE(t.contains(w));
            for (int j = 0; j < 20; ++j) {
                const Vec2 p{U(rng), U(rng)};
                if (t.contains(p)) EXPECT_LE(dist(u, p), t.size + 1e-9);
            }
        }
    }
}

TEST(AngleAlpha, Examples) {
    const ConeSystem cs(6);
    EXPECT_NEAR(angle_alpha(cs, P(0, 0), P(0, 3)), 0, 1e-12);
    EXPECT_EQ(cone_index(cs, P(0, 0), P(1, 1)).index, 1);
    EXPECT_NEAR(angle_alpha(cs, P(0, 0), P(1, 1)), kPi / 12, 1e-12);
    const Vec2 b = direction(kPi / 6);
    EXPECT_NEAR(angle_alpha(cs, P(0, 0), P(b.x, b.y)), kPi / 6, 1e-12);
}

TEST(AngleAlpha, SinAndCosDecomposition) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(-1, 1);
    const ConeSystem cs(6);
    for (int it = 0; it < 500; ++it) {
        const Point u = P(U(rng), U(rng)), w = P(U(rng), U(rng));
        const double a = angle_alpha(cs, u, w);
        EXPECT_LE(a, kPi / 6 + 1e-15);
        auto t = canonical_triangle(cs, u, w);
        const double uw = dist(u.pos(), w.pos());
        EXPECT_NEAR(dist(t.target, t.midpoint_m()), uw * std::sin(a), 1e-12);
        EXPECT_NEAR(t.height, uw * std::cos(a), 1e-12);
    }
}

TEST(PointSet, RejectsDuplicates) {
    EXPECT_THROW(PointSet({P(0, 0, 1), P(0, 0, 2)}), DegenerateInput);
    EXPECT_THROW(PointSet({P(0, 0, 1), P(1, 0, 1)}), DegenerateInput);
    EXPECT_THROW(PointSet({P(std::nan(""), 0, 1)}), DegenerateInput);
}

TEST(PointSet, GeneralPositionReport) {
    // (1,0) and (0,1) are equidistant from the origin; (0,0)-(0,1) is perpendicular to a k=6 boundary.
    PointSet ps({P(0, 0, 0), P(1, 0, 1), P(0.3, 2.1, 2)});
    auto r = general_position_report(ps);
    bool aligned = false;
    for (auto& v : r) aligned |= v.kind == GeneralPositionViolation::Kind::aligned && v.a == 0 && v.b == 1;
    EXPECT_TRUE(aligned);
    PointSet eq({P(0, 0, 0), P(0.31, 0.77, 1), P(0.77, -0.31, 2)});
    bool equi = false;
    for (auto& v : general_position_report(eq)) equi |= v.kind == GeneralPositionViolation::Kind::equidistant && v.apex == 0;
    EXPECT_TRUE(equi);
    PointSet ok({P(0.123, 0.456, 0), P(0.917, 0.241, 1), P(0.333, 0.871, 2)});
    EXPECT_TRUE(general_position_report(ok).empty());
}
