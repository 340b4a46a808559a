#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace npspace;
using namespace fixtures;

namespace {

ClosedSubset frame_of(const Lattice& l) { return ClosedSubset::verify(l, {0, 1, f1::a, f1::b}); }

struct Triple {
    Lattice l;
    ClosedSubset a, b, c;
};

/// Random closed B and closed A, C containing it.
Triple random_triple(std::uint64_t seed, std::mt19937_64& rng) {
    auto l = fragment(1 + seed % 3, 8 + seed % 12, seed);
    auto b = closure(l, random_subset(l, rng, 0.15)).set;
    auto a = closure_over(l, b, random_subset(l, rng, 0.15)).set;
    auto c = closure_over(l, b, random_subset(l, rng, 0.15)).set;
    return {std::move(l), std::move(a), std::move(b), std::move(c)};
}

} // namespace

TEST(Gate, SubsetOfAIsItsOwnGate) {
    const auto l = f1_lattice();
    EXPECT_EQ(gate(l, VertexSet{f1::a, 1}, frame_of(l)).verts, (VertexSet{f1::a, 1}));
}

TEST(Gate, F1IsAFlag) {
    const auto l = f1_lattice();
    const auto g = gate(l, f1::x, frame_of(l));
    EXPECT_EQ(g.verts, (VertexSet{f1::a, f1::b}));
    EXPECT_TRUE(is_flag(l, g.verts));
}

TEST(Gate, ExtraVertexOutsideFrame) {
    const auto l = siblings();
    const auto a = ClosedSubset::verify(l, {0, 1, f1::a, f1::b});
    EXPECT_EQ(gate(l, VertexSet{4, 5}, a).verts, (VertexSet{f1::a, f1::b}));
    EXPECT_FALSE(is_flag(l, {4, 5}));
}

TEST(FirstStepFlag, LayerGapTwo) {
    const auto l = build(0, {{kBottom, kTop, 0}, {kBottom, kTop, 0}});
    const auto a = ClosedSubset::verify(l, {0, 1, 2});
    const auto f = first_step_flag(l, 3, a);
    EXPECT_EQ(f.verts, (VertexSet{kBottom, kTop}));
    EXPECT_TRUE(is_flag(l, f.verts));
    EXPECT_THROW(first_step_flag(l, 2, a), ContractError);
}

TEST(FirstStepFlag, LadderIsLinear) {
    const auto base = build(3, {{kBottom, kTop, 0}, {2, kTop, 3}});
    const auto a_set = ClosedSubset::verify(base, {0, 1, 2, 3});
    for (std::size_t k = 0; k <= 3; ++k) {
        const auto lad = ladder_gadget(base, a_set, 2, 3, 1, k);
        const auto f = first_step_flag(lad.lattice, lad.x, a_set);
        EXPECT_TRUE(is_flag(lad.lattice, f.verts));
        const oracle::Table t(lad.lattice.geometry());
        VertexSet expect;
        for (const auto& p : oracle::direct_paths(t, lad.x, a_set.vertices())) expect.insert(p[1]);
        EXPECT_EQ(f.verts, expect);
        EXPECT_TRUE(direct_paths_determined_by_layers(lad.lattice, lad.x, a_set));
    }
}

TEST(Independence, SiblingsAreIndependentOverTheFrame) {
    const auto l = siblings();
    for (auto how : {IndependenceMethod::Definition, IndependenceMethod::Gate, IndependenceMethod::Free})
        EXPECT_TRUE(independent(l, {4}, {f1::a, f1::b}, {5}, how)) << to_string(how);
}

TEST(Independence, StackedVertexIsNot) {
    const auto l = stacked();
    const auto v = independent(l, {5}, {f1::a, f1::b}, {6});
    ASSERT_FALSE(v);
    EXPECT_EQ(v.witness, (std::vector<Vertex>{5, 6}));
    EXPECT_EQ(v.reason, "zigzag avoids the base");
    EXPECT_FALSE(independent(l, {5}, {f1::a, f1::b}, {6}, IndependenceMethod::Gate));
    EXPECT_FALSE(independent(l, {5}, {f1::a, f1::b}, {6}, IndependenceMethod::Free));
}

TEST(Independence, InsideTheBaseIsIndependentOfAnything) {
    std::mt19937_64 rng(2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto l = fragment(2, 15, seed);
        const auto b = random_subset(l, rng, 0.3);
        const auto cb = closure(l, b).set;
        const auto c = random_subset(l, rng, 0.3);
        EXPECT_TRUE(independent(l, cb.vertices(), b, c));
    }
}

TEST(IndependenceProperty, ThreeMethodsAgreeWithOracle) {
    std::mt19937_64 rng(5);
    std::size_t yes = 0, no = 0;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto tr = random_triple(seed, rng);
        const bool def = bool(independent_closed(tr.l, tr.a, tr.b, tr.c, IndependenceMethod::Definition));
        EXPECT_EQ(def, bool(independent_closed(tr.l, tr.a, tr.b, tr.c, IndependenceMethod::Gate))) << seed;
        EXPECT_EQ(def, bool(independent_closed(tr.l, tr.a, tr.b, tr.c, IndependenceMethod::Free))) << seed;
        const oracle::Table t(tr.l.geometry());
        EXPECT_EQ(def, oracle::independent(t, tr.a.vertices(), tr.b.vertices(), tr.c.vertices())) << seed;
        (def ? yes : no)++;
    }
    EXPECT_GT(yes, 10u);
    EXPECT_GT(no, 10u);
}

TEST(IndependenceProperty, DefinitionAndGateAgreeForRawA) {
    std::mt19937_64 rng(6);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto tr = random_triple(seed, rng);
        const auto raw = random_subset(tr.l, rng, 0.3);
        EXPECT_EQ(bool(crosses_base(tr.l, raw, tr.b, tr.c.vertices())), bool(gate_within(tr.l, raw, tr.c, tr.b)))
            << seed;
    }
}

TEST(IndependenceProperty, ReductionToClosedTriples) {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto l = fragment(1 + seed % 3, 8 + seed % 10, seed);
        const auto a = random_subset(l, rng, 0.15), b = random_subset(l, rng, 0.15), c = random_subset(l, rng, 0.15);
        const bool raw = bool(crosses_base(l, a, closure(l, b).set, c));
        EXPECT_EQ(raw, bool(independent(l, a, b, c))) << seed;
        EXPECT_EQ(raw, oracle::independent(oracle::Table(l.geometry()), a, b, c)) << seed;
    }
}

TEST(IndependenceProperty, NegativeWitnessCrossesNowhere) {
    std::mt19937_64 rng(8);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto tr = random_triple(seed, rng);
        const auto v = independent_closed(tr.l, tr.a, tr.b, tr.c, IndependenceMethod::Definition);
        if (v) continue;
        EXPECT_TRUE(tr.a.contains(v.witness.front()));
        EXPECT_TRUE(tr.c.contains(v.witness.back()));
        EXPECT_FALSE(crosses(tr.l, v.witness, tr.b.vertices()));
        EXPECT_EQ(classify(tr.l.geometry(), as_seq(tr.l, v.witness)), SeqClass::Zigzag);
    }
}

TEST(GateProperty, FlagsBoundsAndOracle) {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 1 + seed % 3;
        const auto l = fragment(n, 18, seed);
        const oracle::Table t(l.geometry());
        const auto a = closure(l, random_subset(l, rng, 0.2)).set;
        for (Vertex x = 0; x < l.size(); ++x) {
            const auto g = gate(l, x, a);
            EXPECT_TRUE(is_flag(l, g.verts));
            EXPECT_LE(g.verts.size(), static_cast<std::size_t>(n + 3));
            EXPECT_EQ(g.verts, oracle::gate(t, {x}, a.vertices()));
            if (a.contains(x)) continue;
            EXPECT_TRUE(is_flag(l, first_step_flag(l, x, a).verts));
            EXPECT_TRUE(direct_paths_determined_by_layers(l, x, a));
            for (const auto& p : direct_paths(l, x, a))
                for (std::size_t i = 0; i + 1 < p.verts.size(); ++i) {
                    EXPECT_TRUE(g.verts.contains(floor_of(l, a, p.verts[i])));
                    EXPECT_TRUE(g.verts.contains(ceil_of(l, a, p.verts[i])));
                }
        }
    }
}

TEST(GateProperty, ComparableSourcesHaveComparableEndpoints) {
    std::mt19937_64 rng(12);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto l = fragment(2, 18, seed);
        const auto a = closure(l, random_subset(l, rng, 0.2)).set;
        for (Vertex x = 0; x < l.size(); ++x)
            for (Vertex y = 0; y < l.size(); ++y) {
                if (!l.less(x, y)) continue;
                for (Vertex gx : gate(l, x, a).verts)
                    for (Vertex gy : gate(l, y, a).verts) EXPECT_TRUE(l.comparable(gx, gy));
            }
    }
}

TEST(GateProperty, EqualsBoundaryAndIsBounded) {
    std::mt19937_64 rng(13);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto l = fragment(1 + seed % 3, 16, seed);
        const auto a = closure(l, random_subset(l, rng, 0.2)).set;
        VertexSet x;
        for (Vertex v : random_subset(l, rng, 0.15))
            if (!a.contains(v)) x.insert(v);
        const auto b = closure_over(l, a, x).set;
        const auto g = gate(l, x, a).verts;
        EXPECT_LE(g.size(), 2 * (b.size() - a.size()));
        for (auto how : {LogOrder::Constructive, LogOrder::GreedyAscending, LogOrder::GreedyDescending})
            EXPECT_EQ(boundary(l, a, b, construction_order(l, a, b, how)), g) << seed;
    }
}
