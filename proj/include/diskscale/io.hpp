#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "diskscale/artifact.hpp"
#include "diskscale/embedding.hpp"
#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/graph.hpp"
#include "diskscale/gridtiling.hpp"
#include "diskscale/rational.hpp"

namespace diskscale {

using Json = nlohmann::ordered_json;

inline std::string graph_class_name(GraphClass cls) {
    switch (cls) {
    case GraphClass::Cluster: return "cluster";
    case GraphClass::Complete: return "complete";
    case GraphClass::Connected: return "connected";
    case GraphClass::Edgeless: return "edgeless";
    }
    return "?";
}

inline GraphClass parse_graph_class(const std::string& name) {
    if (name == "cluster") return GraphClass::Cluster;
    if (name == "complete") return GraphClass::Complete;
    if (name == "connected") return GraphClass::Connected;
    if (name == "edgeless") return GraphClass::Edgeless;
    throw InputError("unknown graph class '" + name + "'");
}

/// Shortest decimal string that parses back to exactly this double.
inline std::string double_to_string(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw InputError("cannot format radius");
    return {buf, end};
}

inline double double_from_string(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InputError("not a radius value: '" + s + "'");
    return v;
}

namespace detail {

inline Rational json_to_rational(const Json& j, const char* what) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string(what) + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError(std::string(what) + " must be an exact value (string or integer)");
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace detail

/// On-disk instance document: the instance itself plus the optional target
/// class and, for generated gadgets, the provenance block.
struct InstanceDoc {
    Instance instance;
    std::optional<GraphClass> target;
    std::vector<ProvenanceRun> provenance;
    std::map<std::string, Rational> parameters;
};

inline InstanceDoc doc_from_artifact(const ReductionArtifact& art, GraphClass target) {
    return {art.instance, target, art.provenance, art.parameters};
}

inline ReductionArtifact artifact_from_doc(const InstanceDoc& doc) {
    ReductionArtifact art{doc.instance, doc.provenance, doc.parameters};
    art.check_roles_cover_points();
    return art;
}

inline Json instance_to_json(const InstanceDoc& doc) {
    Json points = Json::array();
    for (const auto& p : doc.instance.points)
        points.push_back({rational_to_string(p.x), rational_to_string(p.y)});
    Json j;
    j["points"] = std::move(points);
    j["r_min"] = rational_to_string(doc.instance.r_min);
    j["r_max"] = rational_to_string(doc.instance.r_max);
    j["k"] = doc.instance.k;
    if (doc.target) j["class"] = graph_class_name(*doc.target);
    if (!doc.provenance.empty()) {
        Json runs = Json::array();
        for (const auto& run : doc.provenance) runs.push_back({run.begin, run.count, run.role});
        Json params = Json::object();
        for (const auto& [name, value] : doc.parameters)
            params[name] = rational_to_string(value);
        j["provenance"] = {{"runs", std::move(runs)}, {"parameters", std::move(params)}};
    }
    return j;
}

inline InstanceDoc instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("r_min") ||
        !j.contains("r_max") || !j.contains("k"))
        throw InputError("instance file needs points, r_min, r_max, and k");
    InstanceDoc doc;
    const auto& pts = j.at("points");
    if (!pts.is_array()) throw InputError("points must be an array");
    int id = 0;
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != 2)
            throw InputError("each point must be a [x, y] pair");
        doc.instance.points.push_back({detail::json_to_rational(p[0], "point coordinate"),
                                       detail::json_to_rational(p[1], "point coordinate"),
                                       id++});
    }
    doc.instance.r_min = detail::json_to_rational(j.at("r_min"), "r_min");
    doc.instance.r_max = detail::json_to_rational(j.at("r_max"), "r_max");
    if (doc.instance.r_min > doc.instance.r_max)
        throw InputError("r_min must not exceed r_max");
    if (!j.at("k").is_number_integer()) throw InputError("k must be an integer");
    doc.instance.k = j.at("k").get<long long>();
    if (doc.instance.k < 0) throw InputError("k must be nonnegative");
    if (j.contains("class")) doc.target = parse_graph_class(j.at("class").get<std::string>());
    if (j.contains("provenance")) {
        const auto& prov = j.at("provenance");
        for (const auto& run : prov.value("runs", Json::array())) {
            if (!run.is_array() || run.size() != 3)
                throw InputError("provenance runs must be [begin, count, role] triples");
            doc.provenance.push_back(
                {run[0].get<long long>(), run[1].get<long long>(), run[2].get<std::string>()});
        }
        if (prov.contains("parameters"))
            for (const auto& [name, value] : prov.at("parameters").items())
                doc.parameters[name] = detail::json_to_rational(value, name.c_str());
    }
    return doc;
}

inline Json solution_to_json(const RadiusAssignment& r) {
    Json radii = Json::array();
    for (double v : r.radii) radii.push_back(double_to_string(v));
    Json j;
    j["radii"] = std::move(radii);
    j["scaled"] = r.scaled_set();
    return j;
}

inline RadiusAssignment solution_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("radii"))
        throw InputError("solution file needs a radii array");
    RadiusAssignment r;
    for (const auto& v : j.at("radii")) {
        if (!v.is_string()) throw InputError("radii must be decimal strings");
        r.radii.push_back(double_from_string(v.get<std::string>()));
    }
    if (j.contains("scaled") && j.at("scaled").get<std::vector<int>>() != r.scaled_set())
        throw InputError("solution file's scaled list contradicts its radii");
    return r;
}

inline InstanceDoc load_instance(const std::string& path) {
    return instance_from_json(detail::read_json_file(path));
}
inline void save_instance(const std::string& path, const InstanceDoc& doc) {
    detail::write_json_file(path, instance_to_json(doc));
}
inline RadiusAssignment load_solution(const std::string& path) {
    return solution_from_json(detail::read_json_file(path));
}
inline void save_solution(const std::string& path, const RadiusAssignment& r) {
    detail::write_json_file(path, solution_to_json(r));
}

inline EmbeddedGraph embedding_from_json(const Json& j) {
    EmbeddedGraph g;
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("embedding file needs vertices and edges");
    for (const auto& v : j.at("vertices")) {
        EmbeddedVertex ev;
        ev.id = v.at("id").get<int>();
        const auto& pos = v.at("pos");
        if (!pos.is_array() || pos.size() != 2)
            throw InputError("vertex pos must be a [x, y] pair");
        ev.x = detail::json_to_rational(pos[0], "vertex coordinate");
        ev.y = detail::json_to_rational(pos[1], "vertex coordinate");
        std::string dir = v.at("free").get<std::string>();
        if (dir == "left") ev.free = FreeDir::Left;
        else if (dir == "right") ev.free = FreeDir::Right;
        else if (dir == "up") ev.free = FreeDir::Up;
        else if (dir == "down") ev.free = FreeDir::Down;
        else throw InputError("free direction must be left/right/up/down");
        g.vertices.push_back(std::move(ev));
    }
    for (const auto& e : j.at("edges")) {
        EmbeddedEdge ee;
        ee.u = e.at("u").get<int>();
        ee.v = e.at("v").get<int>();
        for (const auto& p : e.at("route")) {
            if (!p.is_array() || p.size() != 2)
                throw InputError("route entries must be [x, y] pairs");
            ee.route.emplace_back(detail::json_to_rational(p[0], "route coordinate"),
                                  detail::json_to_rational(p[1], "route coordinate"));
        }
        g.edges.push_back(std::move(ee));
    }
    return g;
}

inline EmbeddedGraph load_embedding(const std::string& path) {
    return embedding_from_json(detail::read_json_file(path));
}

inline Json tiles_to_json(const GridTilingInstance& inst) {
    Json cells = Json::array();
    for (const auto& col : inst.cells) {
        Json jcol = Json::array();
        for (const auto& cell : col) {
            Json jcell = Json::array();
            for (auto [a, b] : cell) jcell.push_back({a, b});
            jcol.push_back(std::move(jcell));
        }
        cells.push_back(std::move(jcol));
    }
    return {{"kappa", inst.kappa}, {"eta", inst.eta}, {"cells", std::move(cells)}};
}

inline GridTilingInstance tiles_from_json(const Json& j) {
    GridTilingInstance inst;
    if (!j.is_object() || !j.contains("kappa") || !j.contains("eta") || !j.contains("cells"))
        throw InputError("tiling file needs kappa, eta, and cells");
    inst.kappa = j.at("kappa").get<int>();
    inst.eta = j.at("eta").get<int>();
    for (const auto& col : j.at("cells")) {
        inst.cells.emplace_back();
        for (const auto& cell : col) {
            inst.cells.back().emplace_back();
            for (const auto& t : cell) {
                if (!t.is_array() || t.size() != 2)
                    throw InputError("tiling tuples must be [a, b] pairs");
                inst.cells.back().back().emplace_back(t[0].get<int>(), t[1].get<int>());
            }
        }
    }
    validate_gt(inst);
    return inst;
}

inline GridTilingInstance load_tiles(const std::string& path) {
    return tiles_from_json(detail::read_json_file(path));
}
inline void save_tiles(const std::string& path, const GridTilingInstance& inst) {
    detail::write_json_file(path, tiles_to_json(inst));
}

} // namespace diskscale
