#pragma once

// Command-line driver. run() is the whole program minus main(), so tests can
// call it with in-memory streams.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict (witness
// as JSON lines on the error stream), 2 malformed input or a violated
// precondition. Every diagnostic line carries a "code":
//   usage, io, schema, contract, not_simply_connected   (exit 2)
//   violation, not_lattice, zigzag_cycle, not_independent, game_failed (exit 1)

#include "npspace/closure.hpp"
#include "npspace/construction.hpp"
#include "npspace/error.hpp"
#include "npspace/independence.hpp"
#include "npspace/io.hpp"
#include "npspace/iso.hpp"
#include "npspace/lattice.hpp"
#include "npspace/oracle.hpp"
#include "npspace/zigzag.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace npspace::cli {

using io::Json;

namespace detail {

/// Raised inside a verb to end it with exit 2 and the given code.
struct Failure {
    std::string code;
    std::string message;
    Json extra = Json::object();
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{"io", "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Geometry load_geometry(const std::string& path) { return io::parse_geometry(read_file(path)); }

inline Json cycle_json(const ZigzagCycle& c) { return {{"cycle", c.verts}, {"peaks", c.peaks()}}; }

inline Lattice load_lattice(const std::string& path, bool need_simply_connected) {
    Lattice l{load_geometry(path)};
    if (need_simply_connected)
        if (auto c = find_zigzag_cycle(l))
            throw Failure{"not_simply_connected", path + " contains a zigzag cycle", cycle_json(*c)};
    return l;
}

class Names {
public:
    void load(const std::string& path) {
        Json j;
        try {
            j = Json::parse(read_file(path));
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("names: ") + e.what());
        }
        if (!j.is_object()) throw InputError("names: sidecar must map names to ids");
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!it.value().is_number_unsigned()) throw InputError("names: id for \"" + it.key() + "\" must be >= 0");
            ids_[it.key()] = it.value().get<Vertex>();
        }
    }

    Vertex resolve(const std::string& tok) const {
        if (!tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
            return static_cast<Vertex>(std::stoul(tok));
        if (auto it = ids_.find(tok); it != ids_.end()) return it->second;
        throw InputError("unknown vertex reference \"" + tok + "\"");
    }

    VertexSet list(const std::string& csv) const {
        VertexSet out;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.insert(resolve(tok));
        return out;
    }

private:
    std::map<std::string, Vertex> ids_;
};

inline void check_ids(const Lattice& l, const VertexSet& s) {
    for (Vertex v : s)
        if (v >= l.size()) throw InputError("unknown vertex id " + std::to_string(v));
}

inline void emit(std::ostream& os, const Json& j) { os << j.dump() << '\n'; }

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::emit;
    using detail::Failure;

    CLI::App app{"Finite fragments of free N-pseudospaces: zigzags, closure, gates, independence."};
    app.name("npspace");
    app.require_subcommand(1);
    app.fallthrough();
    std::string names_file;
    app.add_option("--names", names_file, "JSON object mapping names to vertex ids");

    detail::Names names;
    std::function<int()> action;

    // build
    auto* build = app.add_subcommand("build", "Build a fragment by simple extensions");
    int b_n = 1;
    std::size_t b_steps = 0;
    std::uint64_t b_seed = 0;
    std::string b_policy = "rr";
    build->add_option("--n", b_n, "N")->required();
    build->add_option("--steps", b_steps, "number of simple extensions");
    build->add_option("--seed", b_seed, "seed for --policy random");
    build->add_option("--policy", b_policy, "rr or random")->check(CLI::IsMember({"rr", "random"}));
    build->callback([&] {
        action = [&] {
            const BuildSchedule s{b_n, b_steps, b_seed, b_policy == "rr" ? Policy::RoundRobin : Policy::SeededRandom};
            auto [l, log] = build_universal(s);
            emit(out, io::to_json(l.geometry()));
            for (const auto& e : log) emit(out, io::to_json(e));
            return 0;
        };
    });

    // check
    auto* check = app.add_subcommand("check", "Validate axioms, lattice property and simple connectivity");
    std::string file;
    check->add_option("geometry", file, "geometry JSON")->required();
    check->callback([&] {
        action = [&] {
            const Geometry g = detail::load_geometry(file);
            if (auto report = validate_geometry(g); !report.empty()) {
                for (const auto& v : report)
                    emit(err, {{"code", "violation"}, {"axiom", to_string(v.kind)}, {"witness", v.witness}});
                return 1;
            }
            if (auto r = is_lattice(g); !r.is_lattice) {
                emit(err, {{"code", "not_lattice"}, {"witness", {r.witness->first, r.witness->second}}});
                return 1;
            }
            const Lattice l{g};
            if (auto c = find_zigzag_cycle(l)) {
                Json j = detail::cycle_json(*c);
                j["code"] = "zigzag_cycle";
                emit(err, j);
                return 1;
            }
            emit(out, {{"lattice", true}, {"simply_connected", true}, {"valid", true}, {"vertices", g.size()}});
            return 0;
        };
    });

    // closure
    auto* clo = app.add_subcommand("closure", "Closure of a vertex set with a construction order");
    std::string x_list, a_list, b_list, c_list;
    clo->add_option("geometry", file)->required();
    clo->add_option("--x", x_list, "vertex ids, comma separated")->required();
    clo->callback([&] {
        action = [&] {
            const Lattice l = detail::load_lattice(file, true);
            const auto x = names.list(x_list);
            detail::check_ids(l, x);
            const auto c = closure(l, x);
            emit(out, {{"closure", c.set.vertices()}, {"order", c.order}});
            return 0;
        };
    });

    // gate
    auto* gt = app.add_subcommand("gate", "Gate of X over a closed set A");
    gt->add_option("geometry", file)->required();
    gt->add_option("--x", x_list)->required();
    gt->add_option("--a", a_list)->required();
    gt->callback([&] {
        action = [&] {
            const Lattice l = detail::load_lattice(file, true);
            const auto x = names.list(x_list);
            auto a_set = names.list(a_list);
            detail::check_ids(l, x);
            detail::check_ids(l, a_set);
            const auto a = ClosedSubset::verify(l, std::move(a_set));
            const auto g = gate(l, x, a);
            emit(out, {{"flag", is_flag(l, g.verts)}, {"gate", g.verts}});
            return 0;
        };
    });

    // delta
    auto* dl = app.add_subcommand("delta", "Direct paths from x to a closed set A and their least length >= 2");
    std::string x_one;
    dl->add_option("geometry", file)->required();
    dl->add_option("--x", x_one)->required();
    dl->add_option("--a", a_list)->required();
    dl->callback([&] {
        action = [&] {
            const Lattice l = detail::load_lattice(file, true);
            const Vertex x = names.resolve(x_one);
            auto a_set = names.list(a_list);
            detail::check_ids(l, {x});
            detail::check_ids(l, a_set);
            const auto a = ClosedSubset::verify(l, std::move(a_set));
            Json paths = Json::array();
            for (const auto& p : direct_paths(l, x, a)) paths.push_back(p.verts);
            const auto d = delta(l, x, a);
            emit(out, {{"delta", d ? Json(*d) : Json(nullptr)}, {"paths", paths}});
            return 0;
        };
    });

    // indep
    auto* ind = app.add_subcommand("indep", "Is A independent from C over B");
    std::string method = "def";
    ind->add_option("geometry", file)->required();
    ind->add_option("--a", a_list)->required();
    ind->add_option("--b", b_list)->required();
    ind->add_option("--c", c_list)->required();
    ind->add_option("--method", method, "def, gate or free")->check(CLI::IsMember({"def", "gate", "free"}));
    ind->callback([&] {
        action = [&] {
            const Lattice l = detail::load_lattice(file, true);
            const auto a = names.list(a_list), b = names.list(b_list), c = names.list(c_list);
            for (const auto* s : {&a, &b, &c}) detail::check_ids(l, *s);
            const auto how = method == "def"    ? IndependenceMethod::Definition
                             : method == "gate" ? IndependenceMethod::Gate
                                                : IndependenceMethod::Free;
            const auto v = independent(l, a, b, c, how);
            emit(out, {{"independent", v.holds}, {"method", method}});
            if (v) return 0;
            emit(err, {{"code", "not_independent"}, {"reason", v.reason}, {"witness", v.witness}});
            return 1;
        };
    });

    // amalgam
    auto* am = app.add_subcommand("amalgam", "Free amalgam of two geometries over a common closed part");
    std::string file2, map_list;
    am->add_option("first", file)->required();
    am->add_option("second", file2)->required();
    am->add_option("--map", map_list, "pairs x:y identifying first-side x with second-side y");
    am->callback([&] {
        action = [&] {
            const Lattice ga = detail::load_lattice(file, false), gc = detail::load_lattice(file2, false);
            std::map<Vertex, Vertex> m{{kBottom, kBottom}, {kTop, kTop}};
            std::stringstream ss(map_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                const auto colon = tok.find(':');
                if (colon == std::string::npos) throw InputError("--map entries must look like x:y");
                m[names.resolve(tok.substr(0, colon))] = names.resolve(tok.substr(colon + 1));
            }
            emit(out, io::to_json(free_amalgam(ga, gc, m).geometry));
            return 0;
        };
    });

    // boundary
    auto* bd = app.add_subcommand("boundary", "Boundary of B over A along a construction log");
    std::string log_list, order = "constructive";
    bd->add_option("geometry", file)->required();
    bd->add_option("--a", a_list)->required();
    bd->add_option("--b", b_list)->required();
    bd->add_option("--log", log_list, "vertices of B outside A in construction order");
    bd->add_option("--order", order, "order used when --log is absent: constructive, asc or desc")
        ->check(CLI::IsMember({"constructive", "asc", "desc"}));
    bd->callback([&] {
        action = [&] {
            const Lattice l = detail::load_lattice(file, true);
            auto a_set = names.list(a_list), b_set = names.list(b_list);
            detail::check_ids(l, a_set);
            detail::check_ids(l, b_set);
            const auto a = ClosedSubset::verify(l, std::move(a_set));
            const auto b = ClosedSubset::verify(l, std::move(b_set));
            std::vector<Vertex> log;
            if (!log_list.empty()) {
                std::stringstream ss(log_list);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) log.push_back(names.resolve(tok));
            } else {
                const auto how = order == "asc"    ? LogOrder::GreedyAscending
                                 : order == "desc" ? LogOrder::GreedyDescending
                                                   : LogOrder::Constructive;
                log = construction_order(l, a, b, how);
            }
            emit(out, {{"boundary", boundary(l, a, b, log)}, {"log", log}});
            return 0;
        };
    });

    // backforth
    auto* bf = app.add_subcommand("backforth", "Back-and-forth game between two geometries");
    std::size_t depth = 1;
    bool grow = false;
    bf->add_option("left", file)->required();
    bf->add_option("right", file2)->required();
    bf->add_option("--depth", depth, "number of rounds");
    bf->add_flag("--grow", grow, "extend the other side when no match exists");
    bf->callback([&] {
        action = [&] {
            const Lattice g = detail::load_lattice(file, false), h = detail::load_lattice(file2, false);
            const auto tr = backforth_game(g, h, depth, grow);
            Json moves = Json::array();
            for (const auto& m : tr.moves)
                moves.push_back({{"added", m.added},
                                 {"grown", m.grown},
                                 {"ok", m.ok},
                                 {"picked", m.picked},
                                 {"side", m.side == Side::Forth ? "forth" : "back"}});
            Json j{{"moves", moves}, {"success", tr.success}};
            emit(out, j);
            if (tr.success) return 0;
            Json e{{"code", "game_failed"}, {"reason", tr.failure}};
            if (tr.cycle) e.update(detail::cycle_json(*tr.cycle));
            emit(err, e);
            return 1;
        };
    });

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Small structures up to isomorphism, one JSON line each");
    std::size_t max_v = 0;
    std::string kind = "geometries";
    int en_n = 1;
    en->add_option("--max", max_v, "largest vertex count")->required();
    en->add_option("--kind", kind, "posets, lattices or geometries")
        ->check(CLI::IsMember({"posets", "lattices", "geometries"}));
    en->add_option("--n", en_n, "N for geometries");
    en->callback([&] {
        action = [&] {
            const auto k = kind == "posets"     ? oracle::Kind::AllPosets
                           : kind == "lattices" ? oracle::Kind::Lattices
                                                : oracle::Kind::NGeometryLattices;
            if (max_v > oracle::kExhaustiveBound)
                throw InputError("enumeration is capped at " + std::to_string(oracle::kExhaustiveBound) +
                                 " vertices; " + std::to_string(max_v) + " would cost " +
                                 oracle::enumeration_cost(max_v));
            for (std::size_t v = 1; v <= max_v; ++v)
                for (const auto& s : oracle::enumerate_structures({v, k, en_n})) {
                    if (k == oracle::Kind::NGeometryLattices) {
                        emit(out, io::to_json(s.to_geometry()));
                        continue;
                    }
                    Json lt = Json::array();
                    for (Vertex x = 0; x < s.size; ++x)
                        for (Vertex y = 0; y < s.size; ++y)
                            if (s.lt[x][y]) lt.push_back({x, y});
                    emit(out, {{"lt", lt}, {"size", s.size}});
                }
            return 0;
        };
    });

    // export
    auto* ex = app.add_subcommand("export", "Re-emit a geometry as canonical JSON or DOT");
    std::string format = "json";
    ex->add_option("geometry", file)->required();
    ex->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    ex->callback([&] {
        action = [&] {
            const Geometry g = detail::load_geometry(file);
            if (format == "dot")
                out << io::to_dot(g);
            else
                emit(out, io::to_json(g));
            return 0;
        };
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit(err, {{"code", "usage"}, {"message", e.what()}});
        return 2;
    }

    try {
        if (!names_file.empty()) names.load(names_file);
        return action();
    } catch (const Failure& f) {
        Json j = f.extra;
        j["code"] = f.code;
        j["message"] = f.message;
        emit(err, j);
    } catch (const InputError& e) {
        emit(err, {{"code", "schema"}, {"message", e.what()}});
    } catch (const ContractError& e) {
        emit(err, {{"code", "contract"}, {"message", e.what()}});
    }
    return 2;
}

} // namespace npspace::cli
