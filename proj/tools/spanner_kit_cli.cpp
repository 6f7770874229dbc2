#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "spanner_kit/spanner_kit.hpp"

using namespace spanner_kit;

namespace {

// Exit codes: 0 ok, 1 bound violated or invariant broken, 2 bad usage or input.
constexpr int kOk = 0, kViolation = 1, kUsage = 2;

struct Options {
    std::optional<std::uint64_t> seed;
    int n = 32;
    int k = 6;
    int m = 2;
    double bbox = 1.0;
    double tolerance = 1e-9;
    std::string graph = "half_theta6";
    std::string algo = "stateless";
    std::string in, out, trace, svg, per_pair;
    std::string source = "random";
    std::string instance = "positive";
    double alpha = 0;
    double nudge = 1e-4;
    std::int64_t from = -1, to = -1;
    int trials = 10;
    bool check = false;
};

std::uint64_t seed_of(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("SPANNER_KIT_SEED")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end == env || *end) throw InvalidParameter("SPANNER_KIT_SEED is not an integer");
        return v;
    }
    return 1;
}

RunConfig config_of(const Options& o, std::uint64_t seed) {
    RunConfig c;
    c.seed = seed;
    c.n = o.n;
    c.k = o.graph == "theta" || o.graph == "yao" ? o.k : 6;
    c.bbox = o.bbox;
    c.tolerance = o.tolerance;
    return c;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) std::cout << text;
    else write_text_file(o.out, text);
}

SpannerGraph build_named(const std::string& name, const PointSet& ps, int k, int m) {
    switch (graph_kind_from_string(name)) {
        case GraphKind::yao: return build_yao(ps, k);
        case GraphKind::theta: return build_theta(ps, k);
        case GraphKind::half_theta6: return build_half_theta6(ps);
        case GraphKind::g12: return build_g12(build_half_theta6(ps));
        case GraphKind::g9: return build_g9(build_half_theta6(ps));
        case GraphKind::rotated_union: return build_rotated_union(ps, m);
        case GraphKind::mst: return build_mst(ps);
        case GraphKind::tree: break;
    }
    throw InvalidParameter("cannot build graph kind '" + name + "'");
}

PointSet points_of(const Options& o) {
    if (!o.in.empty()) return point_set_from_json(read_json_file(o.in));
    return gen_random(config_of(o, seed_of(o)));
}

// A graph file given with --in, otherwise a fresh graph on random points.
SpannerGraph graph_of(const Options& o) {
    if (!o.in.empty()) {
        const auto j = read_json_file(o.in);
        if (j.contains("kind")) return graph_from_json(j);
        return build_named(o.graph, point_set_from_json(j), o.k, o.m);
    }
    return build_named(o.graph, points_of(o), o.k, o.m);
}

int cmd_gen(const Options& o) {
    PointSet ps;
    if (o.source == "random") ps = gen_random(config_of(o, seed_of(o)));
    else if (o.source == "circle") ps = gen_circle(o.n, o.bbox);
    else if (o.source == "routing_lb") ps = gen_routing_lb(routing_instance_from_string(o.instance), o.alpha, o.nudge);
    else if (o.source == "theta5_lb") ps = gen_theta5_lower_bound(o.nudge);
    else throw InvalidParameter("unknown point source '" + o.source + "'");
    emit(o, dump(to_json(ps)));
    return kOk;
}

int cmd_build(const Options& o) {
    emit(o, dump(to_json(build_named(o.graph, points_of(o), o.k, o.m))));
    return kOk;
}

int cmd_analyze(const Options& o) {
    const auto g = graph_of(o);
    const auto r = spanning_ratio(g, !o.per_pair.empty());
    auto j = to_json(r, g);
    bool ok = true;
    if (o.check) {
        const auto b = verify_bound(g, default_bound_for(g), o.tolerance);
        j["bound"] = b.bound;
        j["pass"] = b.pass;
        ok = b.pass;
    }
    if (!o.per_pair.empty()) write_text_file(o.per_pair, per_pair_csv(r, g));
    emit(o, dump(j));
    return ok ? kOk : kViolation;
}

int cmd_route(const Options& o) {
    auto g = graph_of(o);
    if (o.from < 0 || o.to < 0) throw InvalidParameter("--from and --to are required");
    const long s = g.points().index_of(o.from), t = g.points().index_of(o.to);
    if (s < 0 || t < 0) throw InvalidParameter("unknown vertex id");
    if (s == t) throw AlreadyArrived("source equals destination");
    // Simulated routers need their subgraph; derive it from a half-theta-6 input.
    if (o.algo == "g12" && g.kind() == GraphKind::half_theta6) g = build_g12(g);
    if (o.algo == "g9" && g.kind() == GraphKind::half_theta6) g = build_g9(g);
    RoutingTrace tr;
    if (o.algo == "stateless") tr = route_stateless(g, s, t);
    else if (o.algo == "stateful") tr = route_stateful(g, s, t);
    else if (o.algo == "g12") tr = route_g12(g, s, t);
    else if (o.algo == "g9") tr = route_g9(g, s, t);
    else throw InvalidParameter("unknown routing algorithm '" + o.algo + "'");
    if (!o.svg.empty()) {
        SvgOptions so;
        so.triangle_pair = std::pair<int, int>(s, t);
        write_text_file(o.svg, render_svg(g, &tr, so));
    }
    emit(o, dump(to_json(tr)));
    return o.check && !tr.pass ? kViolation : kOk;
}

int cmd_verify(const Options& o) {
    if (o.trials < 1) throw InvalidParameter("--trials must be positive");
    const std::uint64_t base = seed_of(o);
    Json runs = Json::array();
    bool ok = true;
    double worst = 0, bound = 0;
    std::string name;
    for (int i = 0; i < o.trials; ++i) {
        const auto g = build_named(o.graph, gen_random(config_of(o, base + i)), o.k, o.m);
        const auto spec = default_bound_for(g);
        const auto b = verify_bound(g, spec, o.tolerance);
        ok = ok && b.pass;
        worst = std::max(worst, b.measured);
        bound = b.bound;
        name = b.name;
        runs.push_back({{"seed", base + i}, {"measured", b.measured}, {"bound", b.bound}, {"pass", b.pass}});
    }
    emit(o, dump({{"graph", o.graph}, {"bound_name", name}, {"bound", bound}, {"worst", worst}, {"trials", runs}, {"pass", ok}}));
    return ok ? kOk : kViolation;
}

int cmd_render(const Options& o) {
    const auto g = graph_of(o);
    std::optional<RoutingTrace> tr;
    SvgOptions so;
    if (!o.trace.empty()) {
        tr = trace_from_json(read_json_file(o.trace));
        const long s = g.points().index_of(tr->source), t = g.points().index_of(tr->target);
        if (s >= 0 && t >= 0 && s != t) so.triangle_pair = std::pair<int, int>(s, t);
    }
    emit(o, render_svg(g, tr ? &*tr : nullptr, so));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cone-based geometric spanners: construction, measurement and local routing"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "RNG seed (falls back to SPANNER_KIT_SEED, then 1)");
        c->add_option("--n", o.n, "number of random points");
        c->add_option("--k", o.k, "number of cones for yao/theta");
        c->add_option("--bbox", o.bbox, "side of the square for random points (radius for circle)");
        c->add_option("--tolerance", o.tolerance, "comparison tolerance");
        c->add_option("--out", o.out, "output file (default stdout)");
    };
    auto graph_opt = [&](CLI::App* c) {
        c->add_option("--graph", o.graph, "yao|theta|half_theta6|g12|g9|rotated_union|mst");
        c->add_option("--m", o.m, "copies for rotated_union");
    };
    auto* gen = app.add_subcommand("gen", "generate a point set");
    common(gen);
    gen->add_option("--source", o.source, "random|circle|routing_lb|theta5_lb");
    gen->add_option("--instance", o.instance, "positive|negative_a|negative_b (routing_lb)");
    gen->add_option("--alpha", o.alpha, "angle for routing_lb");
    gen->add_option("--nudge", o.nudge, "corner nudge for lower-bound instances");

    auto* build = app.add_subcommand("build", "build a spanner");
    common(build);
    graph_opt(build);
    build->add_option("--in", o.in, "point set JSON (default: random points)");

    auto* analyze = app.add_subcommand("analyze", "measure the spanning ratio");
    common(analyze);
    graph_opt(analyze);
    analyze->add_option("--in", o.in, "graph or point set JSON");
    analyze->add_option("--per-pair", o.per_pair, "CSV file for per-pair ratios");
    analyze->add_flag("--check", o.check, "compare against the proven bound, exit 1 on violation");

    auto* route = app.add_subcommand("route", "route between two vertices");
    common(route);
    graph_opt(route);
    route->add_option("--in", o.in, "graph or point set JSON");
    route->add_option("--algo", o.algo, "stateless|stateful|g12|g9");
    route->add_option("--from", o.from, "source id")->required();
    route->add_option("--to", o.to, "destination id")->required();
    route->add_option("--svg", o.svg, "write an SVG of the route");
    route->add_flag("--check", o.check, "exit 1 if the route exceeds its bound");

    auto* verify = app.add_subcommand("verify", "check the proven bound on random point sets");
    common(verify);
    graph_opt(verify);
    verify->add_option("--trials", o.trials, "number of random sets");

    auto* render = app.add_subcommand("render", "draw a graph as SVG");
    common(render);
    graph_opt(render);
    render->add_option("--in", o.in, "graph or point set JSON");
    render->add_option("--trace", o.trace, "routing trace JSON to overlay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*build) return cmd_build(o);
        if (*analyze) return cmd_analyze(o);
        if (*route) return cmd_route(o);
        if (*verify) return cmd_verify(o);
        if (*render) return cmd_render(o);
    } catch (const InternalInvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
