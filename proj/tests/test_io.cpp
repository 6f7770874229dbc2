#include <gtest/gtest.h>

#include "support.hpp"

using namespace spanner_kit;
using namespace support;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
}

}  // namespace

TEST(Generators, SinglePointDeterministic) {
    const auto a = random_points(1, 1), b = random_points(1, 1);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a, b);
}

TEST(Generators, SameSeedSameBytes) {
    EXPECT_EQ(dump(to_json(random_points(1, 50))), dump(to_json(random_points(1, 50))));
    EXPECT_NE(dump(to_json(random_points(1, 50))), dump(to_json(random_points(2, 50))));
}

TEST(Generators, RandomPointsInGeneralPosition) {
    const auto ps = random_points(1, 50);
    EXPECT_TRUE(general_position_report(ps).empty());
    for (const auto& p : ps) {
        EXPECT_GE(p.x, 0);
        EXPECT_LT(p.x, 1);
    }
}

TEST(Generators, CircleSquare) {
    const auto ps = gen_circle(4);
    EXPECT_NEAR(ps[1].x, 0, 1e-15);
    EXPECT_NEAR(ps[1].y, 1, 1e-15);
    EXPECT_NEAR(dist(ps[0].pos(), ps[1].pos()), std::sqrt(2.0), 1e-15);
    EXPECT_THROW(gen_circle(2), InvalidParameter);
}

TEST(Generators, RejectsBadConfig) {
    RunConfig c;
    c.n = 0;
    EXPECT_THROW(gen_random(c), InvalidParameter);
}

TEST(Json, PointSetRoundTrip) {
    const auto ps = random_points(3, 30);
    EXPECT_EQ(point_set_from_json(Json::parse(dump(to_json(ps)))), ps);
}

TEST(Json, GraphRoundTrip) {
    const auto ps = random_points(4, 40);
    const auto h = build_half_theta6(ps);
    for (const auto& g : {h, build_g12(h), build_g9(h), build_theta(ps, 5), build_rotated_union(ps, 2), build_mst(ps)}) {
        const auto text = dump(to_json(g));
        const auto back = graph_from_json(Json::parse(text));
        EXPECT_EQ(back, g) << to_string(g.kind());
        EXPECT_EQ(dump(to_json(back)), text);
    }
}

TEST(Json, EdgesSortedById) {
    const auto j = to_json(build_half_theta6(random_points(5, 20)));
    std::vector<std::pair<std::int64_t, std::int64_t>> e;
    for (const auto& x : j["edges"]) e.push_back({x[0], x[1]});
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    for (auto [a, b] : e) EXPECT_LT(a, b);
}

TEST(Json, TraceRoundTrip) {
    const auto h = build_half_theta6(random_points(6, 40));
    for (const auto& tr : {route_stateless(h, 0, 7), route_stateful(h, 3, 9), route_g12(build_g12(h), 5, 1), route_g9(build_g9(h), 2, 8)}) {
        const auto back = trace_from_json(Json::parse(dump(to_json(tr))));
        EXPECT_EQ(back, tr);
    }
}

TEST(Json, MalformedInputRejected) {
    EXPECT_THROW(point_set_from_json(Json::parse(R"({"points":[{"id":1,"x":"a","y":0}]})")), InvalidParameter);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"points":[],"kind":"nope","k":6,"edges":[]})")), InvalidParameter);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"points":[{"id":1,"x":0,"y":0}],"kind":"yao","k":6,"edges":[[1,2]]})")),
                 InvalidParameter);
    EXPECT_THROW(trace_from_json(Json::parse(R"({"algo":"x"})")), InvalidParameter);
}

TEST(Svg, GraphOnly) {
    const auto g = build_half_theta6(random_points(7, 20));
    const auto svg = render_svg(g);
    EXPECT_EQ(count(svg, "class=\"edge\""), g.edge_count());
    EXPECT_EQ(count(svg, "class=\"vertex\""), 20u);
    EXPECT_EQ(count(svg, "class=\"route\""), 0u);
    EXPECT_EQ(svg, render_svg(g));
}

TEST(Svg, RouteOverlayOneSegmentPerStep) {
    const auto h = build_half_theta6(random_points(8, 30));
    const auto tr = route_stateless(h, 2, 11);
    SvgOptions o;
    o.triangle_pair = std::pair<int, int>(2, 11);
    const auto svg = render_svg(h, &tr, o);
    EXPECT_EQ(count(svg, "class=\"route\""), tr.steps.size());
    EXPECT_EQ(count(svg, "class=\"triangle\""), 1u);
    EXPECT_EQ(svg, render_svg(h, &tr, o));
}

TEST(Svg, YAxisPointsUp) {
    const auto g = build_half_theta6(PointSet({{0, 0, 0}, {1, 0.1, 1}}));
    const auto svg = render_svg(g);
    // The higher point (id 1) is drawn nearer the top.
    const auto y_of = [&](const std::string& id) {
        const auto p = svg.rfind("cy=\"", svg.find("<title>" + id + "</title>"));
        return std::stod(svg.substr(p + 4));
    };
    EXPECT_LT(y_of("1"), y_of("0"));
}
