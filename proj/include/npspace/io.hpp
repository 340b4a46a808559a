#pragma once

// JSON and DOT formats.
//
// Geometry: {"lt": [[x, y], ...], "n": N, "vertices": [{"id": i, "layer": l}, ...]}
// "lt" may list generators only; the transitive closure is taken on load.
// Output lists covers. Keys are sorted, so dumps are canonical.

#include "npspace/construction.hpp"
#include "npspace/error.hpp"
#include "npspace/geometry.hpp"
#include "npspace/zigzag.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace npspace::io {

using Json = nlohmann::json;

inline Json to_json(const Geometry& g) {
    Json j;
    j["n"] = g.n();
    Json vs = Json::array();
    for (Vertex v = 0; v < g.size(); ++v) vs.push_back({{"id", v}, {"layer", g.layer(v)}});
    j["vertices"] = std::move(vs);
    Json lt = Json::array();
    for (auto [x, y] : g.covers()) lt.push_back({x, y});
    j["lt"] = std::move(lt);
    return j;
}

inline std::string dump(const Geometry& g) { return to_json(g).dump(); }

namespace detail {

inline long long get_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string("schema: ") + what + " must be an integer");
    return j.get<long long>();
}

} // namespace detail

/// Parses the geometry schema. Ids must be dense, 0..k-1, each listed once.
/// Axioms are not checked here.
inline Geometry geometry_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("schema: geometry must be an object");
    for (const char* key : {"n", "vertices", "lt"})
        if (!j.contains(key)) throw InputError(std::string("schema: missing key \"") + key + "\"");
    const long long n = detail::get_int(j["n"], "\"n\"");
    if (n < 0 || n > 1000) throw InputError("schema: \"n\" out of range");
    const Json& vs = j["vertices"];
    if (!vs.is_array() || vs.size() < 2) throw InputError("schema: \"vertices\" must list at least bottom and top");
    std::vector<int> layers(vs.size(), 0);
    std::vector<char> seen(vs.size(), 0);
    for (const Json& v : vs) {
        if (!v.is_object() || !v.contains("id") || !v.contains("layer"))
            throw InputError("schema: each vertex needs \"id\" and \"layer\"");
        const long long id = detail::get_int(v["id"], "vertex id");
        if (id < 0 || id >= static_cast<long long>(vs.size()))
            throw InputError("schema: vertex ids must be dense from 0; got " + std::to_string(id));
        if (seen[id]) throw InputError("schema: duplicate vertex id " + std::to_string(id));
        seen[id] = 1;
        layers[id] = static_cast<int>(detail::get_int(v["layer"], "layer"));
    }
    const Json& lt = j["lt"];
    if (!lt.is_array()) throw InputError("schema: \"lt\" must be an array of pairs");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Json& p : lt) {
        if (!p.is_array() || p.size() != 2) throw InputError("schema: \"lt\" entries must be pairs");
        const long long x = detail::get_int(p[0], "lt entry"), y = detail::get_int(p[1], "lt entry");
        if (x < 0 || y < 0 || x >= static_cast<long long>(vs.size()) || y >= static_cast<long long>(vs.size()))
            throw InputError("schema: \"lt\" names unknown vertex");
        pairs.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
    return Geometry::from_relation(static_cast<int>(n), layers, pairs, true);
}

inline Geometry parse_geometry(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("parse: ") + e.what());
    }
    return geometry_from_json(j);
}

/// Hasse diagram, one rank per layer.
inline std::string to_dot(const Geometry& g) {
    std::ostringstream os;
    os << "digraph geometry {\n  rankdir=BT;\n  node [shape=circle];\n";
    std::map<int, std::vector<Vertex>> by_layer;
    for (Vertex v = 0; v < g.size(); ++v) by_layer[g.layer(v)].push_back(v);
    for (const auto& [layer, vs] : by_layer) {
        os << "  { rank=same;";
        for (Vertex v : vs) os << ' ' << v << ';';
        os << " }\n";
    }
    os << "  0 [label=\"bot\"];\n  1 [label=\"top\"];\n";
    for (auto [x, y] : g.covers()) os << "  " << x << " -> " << y << ";\n";
    os << "}\n";
    return os.str();
}

inline Json to_json(const AltSeq& s) {
    return {{"dir", s.start == Direction::Up ? "up" : "down"}, {"verts", s.verts}};
}

inline Json to_json(const LogEntry& e) { return {{"a", e.type.a}, {"b", e.type.b}, {"s", e.type.s}, {"v", e.v}}; }

inline LogEntry log_entry_from_json(const Json& j) {
    for (const char* key : {"v", "a", "b", "s"})
        if (!j.is_object() || !j.contains(key)) throw InputError(std::string("schema: log entry lacks \"") + key + "\"");
    LogEntry e;
    e.v = static_cast<Vertex>(detail::get_int(j["v"], "\"v\""));
    e.type.a = static_cast<Vertex>(detail::get_int(j["a"], "\"a\""));
    e.type.b = static_cast<Vertex>(detail::get_int(j["b"], "\"b\""));
    e.type.s = static_cast<int>(detail::get_int(j["s"], "\"s\""));
    return e;
}

} // namespace npspace::io
