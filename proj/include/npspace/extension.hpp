#pragma once

#include "npspace/error.hpp"
#include "npspace/geometry.hpp"
#include "npspace/lattice.hpp"

#include <string>
#include <tuple>
#include <utility>

namespace npspace {

/// Type (a, b, s) of a simple extension: the new vertex goes into layer s
/// strictly between a and b.
struct ExtensionType {
    Vertex a = kBottom;
    Vertex b = kTop;
    int s = 0;

    friend auto operator<=>(const ExtensionType&, const ExtensionType&) = default;
};

inline std::string to_string(const ExtensionType& t) {
    return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.s) + ")";
}

inline void check_type(const Geometry& g, const ExtensionType& t) {
    if (!g.contains(t.a) || !g.contains(t.b))
        throw InputError("extension type " + to_string(t) + " names an unknown vertex");
    if (!g.less(t.a, t.b)) throw ContractError("extension type " + to_string(t) + ": requires a < b");
    if (!(g.layer(t.a) < t.s && t.s < g.layer(t.b)))
        throw ContractError("extension type " + to_string(t) + ": layer must lie strictly between");
}

/// Adjoins x of type t: c < x iff c <= a, x < c iff b <= c.
inline std::pair<Geometry, Vertex> simple_extension(const Geometry& g, const ExtensionType& t) {
    check_type(g, t);
    Geometry out = g;
    const Vertex x = out.add_vertex(t.s);
    for (Vertex c = 0; c < x; ++c) {
        if (out.leq(c, t.a)) out.relate(c, x);
        if (out.leq(t.b, c)) out.relate(x, c);
    }
    return {std::move(out), x};
}

/// Same as above on a tabulated lattice; the result stays a lattice with
/// the old one as a sublattice, so the tables are updated incrementally.
inline std::pair<Lattice, Vertex> simple_extension(const Lattice& l, const ExtensionType& t) {
    check_type(l.geometry(), t);
    Lattice out = l.with_simple_extension(t.a, t.b, t.s);
    return {std::move(out), static_cast<Vertex>(l.size())};
}

} // namespace npspace
