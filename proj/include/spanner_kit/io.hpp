#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "routing.hpp"

namespace spanner_kit {

using Json = nlohmann::json;

namespace detail {

template <class F>
auto parsing(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

inline Json vec_json(Vec2 v) { return Json::array({v.x, v.y}); }
inline Vec2 vec_from(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

inline std::string side_name(Side s) { return s == Side::ccw ? "ccw" : "cw"; }

inline Side side_from(const std::string& s) {
    if (s == "ccw") return Side::ccw;
    if (s == "cw") return Side::cw;
    throw InvalidParameter("unknown side '" + s + "'");
}

}  // namespace detail

inline Json to_json(const PointSet& ps) {
    Json pts = Json::array();
    for (const auto& p : ps) pts.push_back({{"id", p.id}, {"x", p.x}, {"y", p.y}});
    return {{"points", pts}};
}

inline PointSet point_set_from_json(const Json& j) {
    return detail::parsing("point set", [&] {
        std::vector<Point> pts;
        for (const auto& p : j.at("points")) pts.push_back({p.at("id").get<std::int64_t>(), p.at("x").get<double>(), p.at("y").get<double>()});
        return PointSet(std::move(pts));
    });
}

inline Json to_json(const SpannerGraph& g) {
    Json j = to_json(g.points());
    j["kind"] = to_string(g.kind());
    j["k"] = g.k();
    j["rotation"] = g.cones().rotation;
    j["copies"] = g.copies();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.id(u), g.id(v)});
    j["edges"] = edges;
    if (g.hints()) {
        Json hints = Json::array();
        for (int v = 0; v < g.n(); ++v) {
            const auto& h = (*g.hints())[v];
            Json dirs = Json::array(), ends = Json::array();
            for (const auto& d : h.toward_closest) dirs.push_back(d ? Json(detail::side_name(*d)) : Json());
            for (const auto& e : h.path_ends)
                ends.push_back(e ? Json{{"first_id", e->first_id}, {"last_id", e->last_id},
                                        {"first", detail::vec_json(e->first)}, {"last", detail::vec_json(e->last)}}
                                 : Json());
            hints.push_back({{"id", g.id(v)}, {"toward_closest", dirs}, {"path_ends", ends}});
        }
        j["metadata"] = {{"hints", hints}};
    }
    return j;
}

inline SpannerGraph graph_from_json(const Json& j) {
    auto ps = point_set_from_json(j);
    return detail::parsing("graph", [&] {
        const auto kind = graph_kind_from_string(j.at("kind").get<std::string>());
        const ConeSystem cs(j.at("k").get<int>(), j.value("rotation", 0.0));
        std::vector<std::pair<int, int>> edges;
        auto index = [&](const Json& id) {
            const long i = ps.index_of(id.get<std::int64_t>());
            if (i < 0) throw InvalidParameter("edge refers to unknown point id " + id.dump());
            return static_cast<int>(i);
        };
        for (const auto& e : j.at("edges")) edges.push_back({index(e.at(0)), index(e.at(1))});
        SpannerGraph g(ps, kind, cs, edges, j.value("copies", 1));
        if (j.contains("metadata") && j["metadata"].contains("hints")) {
            std::vector<VertexHints> hints(g.n());
            for (const auto& h : j["metadata"]["hints"]) {
                auto& out = hints[index(h.at("id"))];
                for (int t = 0; t < 3; ++t) {
                    const auto& d = h.at("toward_closest").at(t);
                    if (!d.is_null()) out.toward_closest[t] = detail::side_from(d.get<std::string>());
                    const auto& e = h.at("path_ends").at(t);
                    if (!e.is_null())
                        out.path_ends[t] = PathEnds{e.at("first_id").get<std::int64_t>(), e.at("last_id").get<std::int64_t>(),
                                                    detail::vec_from(e.at("first")), detail::vec_from(e.at("last"))};
                }
            }
            g.set_hints(std::move(hints));
        }
        return g;
    });
}

inline Json to_json(const RoutingTrace& tr) {
    Json steps = Json::array();
    for (const auto& s : tr.steps)
        steps.push_back({{"from", s.from},
                         {"to", s.to},
                         {"case", to_string(s.label)},
                         {"pref", to_string(s.pref)},
                         {"phi_before", s.phi_before},
                         {"phi_after", s.phi_after},
                         {"len", s.length},
                         {"exploration", s.exploration},
                         {"probe_cost", s.probe_cost},
                         {"hops", s.hops}});
    return {{"algo", tr.algo},
            {"source", tr.source},
            {"target", tr.target},
            {"steps", steps},
            {"total", tr.total_path_length},
            {"exploration", tr.exploration_travel},
            {"probe_allowance", tr.probe_allowance},
            {"bound", tr.bound},
            {"success", tr.success},
            {"pass", tr.pass}};
}

inline RoutingTrace trace_from_json(const Json& j) {
    return detail::parsing("routing trace", [&] {
        RoutingTrace tr;
        tr.algo = j.at("algo").get<std::string>();
        tr.source = j.at("source").get<std::int64_t>();
        tr.target = j.at("target").get<std::int64_t>();
        for (const auto& s : j.at("steps")) {
            RoutingStep st;
            st.from = s.at("from").get<std::int64_t>();
            st.to = s.at("to").get<std::int64_t>();
            st.label = case_label_from_string(s.at("case").get<std::string>());
            st.pref = preferred_side_from_string(s.value("pref", std::string("nil")));
            st.phi_before = s.at("phi_before").get<double>();
            st.phi_after = s.at("phi_after").get<double>();
            st.length = s.at("len").get<double>();
            st.exploration = s.value("exploration", 0.0);
            st.probe_cost = s.value("probe_cost", 0.0);
            st.hops = s.value("hops", std::vector<std::int64_t>{});
            tr.steps.push_back(std::move(st));
        }
        tr.total_path_length = j.at("total").get<double>();
        tr.exploration_travel = j.at("exploration").get<double>();
        tr.probe_allowance = j.value("probe_allowance", 0.0);
        tr.bound = j.at("bound").get<double>();
        tr.success = j.value("success", true);
        tr.pass = j.at("pass").get<bool>();
        return tr;
    });
}

inline Json to_json(const RatioReport& r, const SpannerGraph& g) {
    Json j{{"max_ratio", r.max_ratio}, {"witness", Json::array()}};
    if (r.witness_u >= 0) j["witness"] = {g.id(r.witness_u), g.id(r.witness_v)};
    return j;
}

inline Json to_json(const BoundReport& b, const SpannerGraph& g) {
    Json j{{"name", b.name}, {"bound", b.bound}, {"measured", b.measured}, {"slack", b.slack}, {"pass", b.pass}};
    j["witness"] = b.witness_u >= 0 ? Json{g.id(b.witness_u), g.id(b.witness_v)} : Json::array();
    return j;
}

// Per-pair CSV dump: u,v,graph_distance,euclidean,ratio (ids).
inline std::string per_pair_csv(const RatioReport& r, const SpannerGraph& g) {
    std::ostringstream out;
    out.precision(17);
    out << "u,v,graph_distance,euclidean,ratio\n";
    if (r.per_pair)
        for (const auto& row : *r.per_pair)
            out << g.id(row.u) << ',' << g.id(row.v) << ',' << row.graph_distance << ',' << row.euclidean << ',' << row.ratio << '\n';
    return out.str();
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open " + path);
    return detail::parsing("file", [&] { return Json::parse(in); });
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParameter("cannot write " + path);
    out << text;
}

}  // namespace spanner_kit
