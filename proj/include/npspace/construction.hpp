#pragma once

// Building geometries by simple extensions: the fair universal builder,
// free amalgams and the ladder gadget.

#include "npspace/closure.hpp"
#include "npspace/error.hpp"
#include "npspace/extension.hpp"
#include "npspace/geometry.hpp"
#include "npspace/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace npspace {

enum class Policy { RoundRobin, SeededRandom };

struct BuildSchedule {
    int n = 1;
    std::size_t steps = 0;
    std::uint64_t seed = 0;
    Policy policy = Policy::RoundRobin;
};

struct LogEntry {
    Vertex v = 0;
    ExtensionType type;
    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

using ConstructionLog = std::vector<LogEntry>;

/// Applies the log to {bottom, top}. Entry ids must continue the dense
/// sequence.
inline Lattice replay(int n, const ConstructionLog& log) {
    Lattice l{Geometry(n)};
    for (const auto& e : log) {
        if (e.v != l.size())
            throw InputError("log entry for vertex " + std::to_string(e.v) + " out of sequence (expected " +
                             std::to_string(l.size()) + ")");
        l = simple_extension(l, e.type).first;
    }
    return l;
}

namespace detail {

/// Types that become available once x exists, sorted by (a, b, s).
inline std::vector<ExtensionType> types_through(const Lattice& l, Vertex x) {
    std::vector<ExtensionType> out;
    const int s = l.layer(x);
    for (Vertex c = 0; c < l.size(); ++c) {
        if (l.less(c, x))
            for (int t = l.layer(c) + 1; t < s; ++t) out.push_back({c, x, t});
        if (l.less(x, c))
            for (int t = s + 1; t < l.layer(c); ++t) out.push_back({x, c, t});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Starting from {bottom, top}, applies `steps` simple extensions.
///
/// RoundRobin keeps a queue of available types, initially sorted by
/// (a, b, s). Each step takes the front type, uses it, moves it to the back
/// and appends the types created by the new vertex in sorted order.
/// SeededRandom keeps the same list and draws an index uniformly from a
/// mt19937_64 seeded with `seed`.
inline std::pair<Lattice, ConstructionLog> build_universal(const BuildSchedule& sched) {
    if (sched.n < 0) throw InputError("build_universal: N must be >= 0");
    Lattice l{Geometry(sched.n)};
    ConstructionLog log;
    std::deque<ExtensionType> queue;
    for (int s = 0; s <= sched.n; ++s) queue.push_back({kBottom, kTop, s});
    std::mt19937_64 rng(sched.seed);

    for (std::size_t i = 0; i < sched.steps; ++i) {
        ExtensionType t;
        if (sched.policy == Policy::RoundRobin) {
            t = queue.front();
            queue.pop_front();
            queue.push_back(t);
        } else {
            t = queue[rng() % queue.size()];
        }
        auto [next, x] = simple_extension(l, t);
        l = std::move(next);
        log.push_back({x, t});
        for (const auto& u : detail::types_through(l, x)) queue.push_back(u);
    }
    return {std::move(l), std::move(log)};
}

// ---------------------------------------------------------------------------
// Free amalgam

struct Amalgam {
    Geometry geometry;
    std::vector<Vertex> embed_a;  // ga id -> amalgam id (identity)
    std::vector<Vertex> embed_c;  // gc id -> amalgam id
};

/// Glues ga and gc along b_map (a closed subset of ga onto a closed subset
/// of gc). Vertices of ga keep their ids; gc's vertices outside the image
/// of b_map follow in ascending order. Across the two sides, p <= q holds
/// iff p <= b <= q for some glued b.
inline Amalgam free_amalgam(const Lattice& ga, const Lattice& gc, const std::map<Vertex, Vertex>& b_map) {
    if (ga.n() != gc.n()) throw ContractError("free_amalgam: factors have different N");
    VertexSet ba, bc;
    for (auto [x, y] : b_map) {
        if (x >= ga.size() || y >= gc.size())
            throw InputError("free_amalgam: map names unknown vertex (" + std::to_string(x) + "," +
                             std::to_string(y) + ")");
        ba.insert(x);
        bc.insert(y);
    }
    if (bc.size() != ba.size()) throw ContractError("free_amalgam: map is not injective");
    for (auto [x, y] : b_map)
        if (ga.layer(x) != gc.layer(y))
            throw ContractError("free_amalgam: layer mismatch at (" + std::to_string(x) + "," + std::to_string(y) +
                                ")");
    for (auto [x1, y1] : b_map)
        for (auto [x2, y2] : b_map)
            if (ga.less(x1, x2) != gc.less(y1, y2))
                throw ContractError("free_amalgam: order mismatch at pair (" + std::to_string(x1) + "," +
                                    std::to_string(x2) + ")");
    if (auto v = is_closed(ga, ba); !v)
        throw ContractError("free_amalgam: base is not closed in the first factor " + to_string(v.witness));
    if (auto v = is_closed(gc, bc); !v)
        throw ContractError("free_amalgam: base is not closed in the second factor " + to_string(v.witness));

    Amalgam out;
    std::vector<int> layers = ga.geometry().layers();
    out.embed_a.resize(ga.size());
    for (Vertex v = 0; v < ga.size(); ++v) out.embed_a[v] = v;
    out.embed_c.assign(gc.size(), kNoVertex);
    for (auto [x, y] : b_map) out.embed_c[y] = x;
    for (Vertex y = 0; y < gc.size(); ++y)
        if (out.embed_c[y] == kNoVertex) {
            out.embed_c[y] = static_cast<Vertex>(layers.size());
            layers.push_back(gc.layer(y));
        }

    std::vector<std::pair<Vertex, Vertex>> pairs = ga.geometry().relation();
    for (auto [p, q] : gc.geometry().relation())
        if (!(bc.contains(p) && bc.contains(q))) pairs.emplace_back(out.embed_c[p], out.embed_c[q]);
    for (Vertex p = 0; p < ga.size(); ++p) {
        if (ba.contains(p)) continue;
        for (Vertex q = 0; q < gc.size(); ++q) {
            if (bc.contains(q)) continue;
            bool up = false, down = false;
            for (auto [x, y] : b_map) {
                up = up || (ga.leq(p, x) && gc.leq(y, q));
                down = down || (gc.leq(q, y) && ga.leq(x, p));
            }
            if (up) pairs.emplace_back(p, out.embed_c[q]);
            if (down) pairs.emplace_back(out.embed_c[q], p);
        }
    }
    out.geometry = Geometry::from_relation(ga.n(), layers, pairs, false);
    return out;
}

// ---------------------------------------------------------------------------
// Ladder gadget

struct Ladder {
    Lattice lattice;
    Vertex x = 0;
    Vertex anchor = 0;          // first rung
    std::vector<Vertex> rungs;  // in creation order
    ConstructionLog log;
};

/// Adds an alternating ladder between a and b and finally x in layer s.
///
/// With r = layer(a), t = layer(b) and s <= t - 2: a_0 of type (a, b, r+1),
/// then for i = 0..k the rung b_i of type (a_i, b, t-1) and, for i < k,
/// a_(i+1) of type (a, b_i, r+1); x gets type (a, b_k, s). For s = t - 1
/// the construction is mirrored, starting from b_0 of type (a, b, t-1).
inline Ladder ladder_gadget(const Lattice& l, const ClosedSubset& base, Vertex a, Vertex b, int s, std::size_t k) {
    if (!base.contains(a) || !base.contains(b)) throw ContractError("ladder_gadget: a and b must lie in A");
    if (!l.less(a, b)) throw ContractError("ladder_gadget: requires a < b");
    const int r = l.layer(a), t = l.layer(b);
    if (t - r < 3) throw ContractError("ladder_gadget: layer gap between a and b must be at least 3");
    if (!(r < s && s < t)) throw ContractError("ladder_gadget: s must lie strictly between the layers of a and b");

    Ladder out{l, 0, 0, {}, {}};
    auto add = [&](ExtensionType ty) {
        auto [next, v] = simple_extension(out.lattice, ty);
        out.lattice = std::move(next);
        out.log.push_back({v, ty});
        out.rungs.push_back(v);
        return v;
    };
    const bool mirrored = s == t - 1;
    Vertex lo = a, hi = b;
    if (!mirrored) {
        lo = add({a, b, r + 1});
        for (std::size_t i = 0;; ++i) {
            hi = add({lo, b, t - 1});
            if (i == k) break;
            lo = add({a, hi, r + 1});
        }
        out.x = add({a, hi, s});
    } else {
        hi = add({a, b, t - 1});
        for (std::size_t i = 0;; ++i) {
            lo = add({a, hi, r + 1});
            if (i == k) break;
            hi = add({lo, b, t - 1});
        }
        out.x = add({lo, b, s});
    }
    out.rungs.pop_back();
    out.anchor = out.rungs.front();
    return out;
}

} // namespace npspace
