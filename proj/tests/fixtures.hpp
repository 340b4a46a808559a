#pragma once

#include "npspace/npspace.hpp"
#include "npspace/oracle.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using namespace npspace;

// Hexagon H: N = 1, a_i in layer 0, b_i in layer 1.
namespace hex {
inline constexpr Vertex a0 = 2, a1 = 3, a2 = 4, b0 = 5, b1 = 6, b2 = 7;
}

inline Geometry hexagon() {
    using namespace hex;
    const std::vector<int> layers{-1, 2, 0, 0, 0, 1, 1, 1};
    std::vector<std::pair<Vertex, Vertex>> pairs{{a0, b0}, {a1, b0}, {a1, b1}, {a2, b1}, {a2, b2}, {a0, b2}};
    for (Vertex v = 2; v < 8; ++v) {
        pairs.emplace_back(kBottom, v);
        pairs.emplace_back(v, kTop);
    }
    pairs.emplace_back(kBottom, kTop);
    return Geometry::from_relation(1, layers, pairs);
}

// F1: N = 3, a = (bot, top, 0), b = (a, top, 3), x = (a, b, 1).
namespace f1 {
inline constexpr Vertex a = 2, b = 3, x = 4;
}

inline Lattice build(int n, const std::vector<ExtensionType>& types) {
    Lattice l{Geometry(n)};
    for (const auto& t : types) l = simple_extension(l, t).first;
    return l;
}

inline Lattice f1_lattice() { return build(3, {{kBottom, kTop, 0}, {2, kTop, 3}, {2, 3, 1}}); }

// F1 plus a sibling x' = 5 of the same type (a, b, 1).
inline Lattice siblings() { return build(3, {{kBottom, kTop, 0}, {2, kTop, 3}, {2, 3, 1}, {2, 3, 1}}); }

// Siblings plus y = 6 of type (5, b, 2) stacked on x' = 5.
inline Lattice stacked() {
    return build(3, {{kBottom, kTop, 0}, {2, kTop, 3}, {2, 3, 1}, {2, 3, 1}, {5, 3, 2}});
}

// {bot, top} plus two incomparable layer-0 vertices, N = 1.
inline Lattice two_atoms() { return build(1, {{kBottom, kTop, 0}, {kBottom, kTop, 0}}); }

/// The 4-crown x0,x1 < y0,y1 with no bounds, as a raw relation for meet
/// tests. Stored with the two bound slots present but unrelated.
inline Geometry crown() {
    const std::vector<int> layers{-1, 2, 0, 0, 1, 1};
    std::vector<std::pair<Vertex, Vertex>> pairs{{2, 4}, {2, 5}, {3, 4}, {3, 5}};
    return Geometry::from_relation(1, layers, pairs);
}

inline Lattice fragment(int n, std::size_t steps, std::uint64_t seed) {
    return build_universal({n, steps, seed, Policy::SeededRandom}).first;
}

/// Each non-bound vertex independently with probability p.
inline VertexSet random_subset(const Lattice& l, std::mt19937_64& rng, double p) {
    std::bernoulli_distribution coin(p);
    VertexSet s;
    for (Vertex v = 2; v < l.size(); ++v)
        if (coin(rng)) s.insert(v);
    return s;
}

inline Vertex random_vertex(const Lattice& l, std::mt19937_64& rng) {
    return static_cast<Vertex>(2 + rng() % (l.size() - 2));
}

} // namespace fixtures
