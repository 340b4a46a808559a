#pragma once

// Gates, first-step flags and the zigzag-crossing independence relation.

#include "npspace/closure.hpp"
#include "npspace/error.hpp"
#include "npspace/lattice.hpp"
#include "npspace/verdict.hpp"
#include "npspace/zigzag.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace npspace {

/// Endpoints of all direct paths from elements of X into a closed set.
struct Gate {
    VertexSet verts;
    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Linearly ordered.
inline bool is_flag(const Lattice& l, const VertexSet& s) {
    for (auto i = s.begin(); i != s.end(); ++i)
        for (auto j = std::next(i); j != s.end(); ++j)
            if (!l.comparable(*i, *j)) return false;
    return true;
}

inline Gate gate(const Lattice& l, const VertexSet& x, const ClosedSubset& a) {
    Gate g;
    for (Vertex v : x)
        for (const auto& p : direct_paths(l, v, a)) g.verts.insert(p.end());
    return g;
}

inline Gate gate(const Lattice& l, Vertex x, const ClosedSubset& a) { return gate(l, VertexSet{x}, a); }

/// Second vertices of the direct paths from z (not in A) to A.
inline Gate first_step_flag(const Lattice& l, Vertex z, const ClosedSubset& a) {
    if (a.contains(z)) throw ContractError("first_step_flag: z lies in A");
    Gate g;
    for (const auto& p : direct_paths(l, z, a)) g.verts.insert(p.verts[1]);
    return g;
}

/// True when no two distinct direct paths from z to A share their first
/// direction and the layer sequence of their interior vertices.
inline bool direct_paths_determined_by_layers(const Lattice& l, Vertex z, const ClosedSubset& a) {
    std::map<std::pair<bool, std::vector<int>>, std::vector<Vertex>> seen;
    for (const auto& p : direct_paths(l, z, a)) {
        if (p.length() == 0) continue;
        std::vector<int> layers;
        for (std::size_t i = 1; i + 1 < p.verts.size(); ++i) layers.push_back(l.layer(p.verts[i]));
        auto [it, fresh] = seen.try_emplace({l.less(z, p.verts[1]), std::move(layers)}, p.verts);
        if (!fresh && it->second != p.verts) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Independence

/// Contents of a zigzag meet `b`: some vertex lies in b, or some open
/// interval between consecutive vertices does.
inline bool crosses(const Lattice& l, std::span<const Vertex> path, const VertexSet& b) {
    const auto in = mask_of(l.size(), b);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (in[path[i]]) return true;
        if (i + 1 < path.size() && detail::interval_meets(l, path[i], path[i + 1], in)) return true;
    }
    return false;
}

/// The defining test on raw sets, with `base` already closed: every zigzag
/// from an element of A to an element of C crosses `base`. A negative
/// answer carries the lexicographically least zigzag that crosses nowhere.
inline Verdict crosses_base(const Lattice& l, const VertexSet& a, const ClosedSubset& base, const VertexSet& c) {
    const auto in_b = mask_of(l.size(), base.vertices());
    const auto in_c = mask_of(l.size(), c);
    std::vector<Vertex> witness;
    for (Vertex u : a) {
        if (in_b[u]) continue;
        walk_zigzags(l, u, l.size(), [&](std::span<const Vertex> p) {
            if (p.size() >= 2) {
                const Vertex prev = p[p.size() - 2], last = p.back();
                if (in_b[last] || detail::interval_meets(l, prev, last, in_b)) return Walk::Skip;
            }
            if (in_c[p.back()]) {
                witness.assign(p.begin(), p.end());
                return Walk::Stop;
            }
            return Walk::Descend;
        });
        if (!witness.empty()) return Verdict::no(std::move(witness), "zigzag avoids the base");
    }
    return Verdict::yes();
}

/// gate(A/C) is contained in `base`. A negative answer carries a direct path
/// from A to C whose endpoint lies outside the base.
inline Verdict gate_within(const Lattice& l, const VertexSet& a, const ClosedSubset& c, const ClosedSubset& base) {
    for (Vertex u : a)
        for (const auto& p : direct_paths(l, u, c))
            if (!base.contains(p.end())) return Verdict::no(p.verts, "gate leaves the base");
    return Verdict::yes();
}

/// A is free from C over B (comparabilities between the two sides factor
/// through B, both directions) and A u C is closed.
inline Verdict free_and_closed(const Lattice& l, const ClosedSubset& a, const ClosedSubset& b,
                               const ClosedSubset& c) {
    for (Vertex x : a)
        for (Vertex y : c) {
            if (!l.comparable(x, y)) continue;
            const Vertex lo = l.less(x, y) ? x : y, hi = l.less(x, y) ? y : x;
            bool through = false;
            for (Vertex z : b)
                if (l.leq(lo, z) && l.leq(z, hi)) {
                    through = true;
                    break;
                }
            if (!through) return Verdict::no({x, y}, "not free: comparability avoids the base");
        }
    if (auto v = is_closed(l, set_union(a.vertices(), c.vertices())); !v)
        return Verdict::no(std::move(v.witness), "union is not closed");
    return Verdict::yes();
}

enum class IndependenceMethod { Definition, Gate, Free };

inline const char* to_string(IndependenceMethod m) {
    switch (m) {
    case IndependenceMethod::Definition: return "def";
    case IndependenceMethod::Gate: return "gate";
    case IndependenceMethod::Free: return "free";
    }
    return "unknown";
}

/// The closed triple cl(AB), cl(B), cl(BC) that independence reduces to.
struct ClosedTriple {
    ClosedSubset a, b, c;
};

inline ClosedTriple close_triple(const Lattice& l, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
    auto cb = closure(l, b).set;
    auto ca = closure_over(l, cb, a).set;
    auto cc = closure_over(l, cb, c).set;
    return {std::move(ca), std::move(cb), std::move(cc)};
}

/// A independent from C over B on a closed triple with B inside A and C.
inline Verdict independent_closed(const Lattice& l, const ClosedSubset& a, const ClosedSubset& b,
                                  const ClosedSubset& c, IndependenceMethod how) {
    switch (how) {
    case IndependenceMethod::Definition: return crosses_base(l, a.vertices(), b, c.vertices());
    case IndependenceMethod::Gate: return gate_within(l, a.vertices(), c, b);
    case IndependenceMethod::Free: return free_and_closed(l, a, b, c);
    }
    throw InputError("unknown independence method");
}

/// A independent from C over B for arbitrary sets: the sets are replaced by
/// cl(AB), cl(B), cl(BC) and the chosen method is applied.
inline Verdict independent(const Lattice& l, const VertexSet& a, const VertexSet& b, const VertexSet& c,
                           IndependenceMethod how = IndependenceMethod::Definition) {
    auto t = close_triple(l, a, b, c);
    return independent_closed(l, t.a, t.b, t.c, how);
}

} // namespace npspace
