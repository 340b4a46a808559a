#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace npspace;
using namespace fixtures;

TEST(Geometry, MinimalGeometryIsValid) {
    EXPECT_TRUE(validate_geometry(Geometry(1)).empty());
    EXPECT_TRUE(validate_geometry(Geometry(0)).empty());
}

TEST(Geometry, NZeroHasOneProperLayer) {
    Lattice l{Geometry(0)};
    auto [m, x] = simple_extension(l, {kBottom, kTop, 0});
    EXPECT_EQ(m.layer(x), 0);
    EXPECT_THROW(simple_extension(m, {kBottom, kTop, 1}), ContractError);
}

TEST(Geometry, LayerMonotonicityViolationIsReported) {
    const std::vector<int> layers{-1, 2, 0, 0};
    const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {0, 2}, {0, 3}, {2, 1}, {3, 1}, {2, 3}};
    const auto report = validate_geometry(Geometry::from_relation(1, layers, pairs));
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].kind, AxiomKind::LayerMonotonicity);
    EXPECT_EQ(report[0].witness, (std::vector<Vertex>{2, 3}));
}

TEST(Geometry, EveryAxiomKindCanFire) {
    const std::vector<int> layers{0, 5, 1, -1};
    const std::vector<std::pair<Vertex, Vertex>> pairs{{2, 2}, {2, 1}};
    const auto g = Geometry::from_relation(1, layers, pairs, false);
    std::set<AxiomKind> kinds;
    for (const auto& v : validate_geometry(g)) kinds.insert(v.kind);
    for (auto k : {AxiomKind::Irreflexivity, AxiomKind::LayerRange, AxiomKind::BottomLayer, AxiomKind::TopLayer,
                   AxiomKind::BottomNotLeast, AxiomKind::TopNotGreatest, AxiomKind::ExtremeLayerNotUnique})
        EXPECT_TRUE(kinds.contains(k)) << to_string(k);
}

TEST(Geometry, NonTransitiveRelationIsReported) {
    const std::vector<int> layers{-1, 3, 0, 1, 2};
    std::vector<std::pair<Vertex, Vertex>> pairs{{2, 3}, {3, 4}, {0, 1}};
    for (Vertex v = 2; v < 5; ++v) pairs.insert(pairs.end(), {{0, v}, {v, 1}});
    const auto report = validate_geometry(Geometry::from_relation(2, layers, pairs, false));
    ASSERT_FALSE(report.empty());
    EXPECT_EQ(report[0].kind, AxiomKind::Transitivity);
    EXPECT_EQ(report[0].witness, (std::vector<Vertex>{2, 3, 4}));
}

TEST(Geometry, HexagonIsValidLattice) {
    const auto h = hexagon();
    EXPECT_TRUE(validate_geometry(h).empty());
    EXPECT_TRUE(is_lattice(h).is_lattice);
    EXPECT_FALSE(is_lattice(h).witness);
}

TEST(Geometry, HexagonMeetOfPeaks) {
    const auto h = hexagon();
    EXPECT_EQ(meet(h, hex::b0, hex::b1), hex::a1);
    EXPECT_EQ(join(h, hex::a0, hex::a1), hex::b0);
    EXPECT_EQ(meet(h, hex::a0, hex::a1), kBottom);
}

TEST(Geometry, MeetWithTopIsIdentity) {
    const auto l = fragment(2, 15, 3);
    for (Vertex x = 0; x < l.size(); ++x) {
        EXPECT_EQ(meet(l.geometry(), x, kTop), x);
        EXPECT_EQ(join(l.geometry(), x, kBottom), x);
        EXPECT_EQ(meet(l.geometry(), x, x), x);
    }
}

TEST(Geometry, CrownMeetIsAbsent) { EXPECT_FALSE(meet(crown(), 4, 5).has_value()); }

TEST(Geometry, MeetOfUnknownVertexThrows) { EXPECT_THROW(meet(hexagon(), 0, 42), InputError); }

TEST(Geometry, TwoAtomsFormALattice) {
    const auto l = two_atoms();
    EXPECT_TRUE(is_lattice(l.geometry()).is_lattice);
    EXPECT_EQ(l.meet(2, 3), kBottom);
    EXPECT_EQ(l.join(2, 3), kTop);
}

TEST(Geometry, BoundedCrownIsNotALattice) {
    const std::vector<int> layers{-1, 2, 0, 0, 1, 1};
    std::vector<std::pair<Vertex, Vertex>> pairs{{2, 4}, {2, 5}, {3, 4}, {3, 5}, {0, 1}};
    for (Vertex v = 2; v < 6; ++v) pairs.insert(pairs.end(), {{0, v}, {v, 1}});
    const auto g = Geometry::from_relation(1, layers, pairs);
    const auto r = is_lattice(g);
    EXPECT_FALSE(r.is_lattice);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, (std::pair<Vertex, Vertex>{2, 3}));
    EXPECT_THROW(Lattice{g}, ContractError);
}

TEST(Geometry, IsLatticeRejectsInvalidGeometry) { EXPECT_THROW(is_lattice(crown()), InputError); }

TEST(Geometry, OpenIntervals) {
    const auto h = hexagon();
    EXPECT_EQ(open_interval(h, kBottom, kTop), (VertexSet{2, 3, 4, 5, 6, 7}));
    EXPECT_TRUE(open_interval(h, hex::a0, hex::b0).empty());
    EXPECT_TRUE(open_interval(h, hex::a0, hex::a0).empty());
    EXPECT_TRUE(open_interval(h, hex::a0, hex::a1).empty());
    EXPECT_EQ(closed_interval(h, hex::b0, hex::a0), (VertexSet{hex::a0, hex::b0}));
    EXPECT_THROW(open_interval(h, 0, 99), InputError);
}

TEST(GeometryProperty, IntervalsAreSymmetric) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto l = fragment(3, 20, seed);
        const auto& g = l.geometry();
        for (Vertex x = 0; x < g.size(); ++x)
            for (Vertex y = 0; y < g.size(); ++y) {
                ASSERT_EQ(open_interval(g, x, y), open_interval(g, y, x));
                ASSERT_EQ(closed_interval(g, x, y), closed_interval(g, y, x));
            }
    }
}

TEST(GeometryProperty, MeetIsGreatestLowerBound) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto l = fragment(2, 18, seed);
        const auto& g = l.geometry();
        for (Vertex x = 0; x < g.size(); ++x)
            for (Vertex y = 0; y < g.size(); ++y) {
                const Vertex m = l.meet(x, y);
                ASSERT_EQ(m, meet(g, y, x));
                ASSERT_TRUE(g.leq(m, x) && g.leq(m, y));
                for (Vertex z = 0; z < g.size(); ++z) {
                    if (g.leq(z, x) && g.leq(z, y)) ASSERT_TRUE(g.leq(z, m));
                }
            }
    }
}

TEST(GeometryProperty, ValidationAgreesWithOracleOnPerturbedRelations) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto base = fragment(1 + trial % 3, 6, trial);
        std::vector<std::pair<Vertex, Vertex>> pairs = base.geometry().relation();
        std::vector<int> layers = base.geometry().layers();
        const auto n = static_cast<Vertex>(layers.size());
        switch (rng() % 4) {
        case 0: pairs.emplace_back(rng() % n, rng() % n); break;
        case 1:
            if (!pairs.empty()) pairs.erase(pairs.begin() + rng() % pairs.size());
            break;
        case 2: layers[rng() % n] += static_cast<int>(rng() % 3) - 1; break;
        default: break;
        }
        const auto g = Geometry::from_relation(base.n(), layers, pairs, false);
        EXPECT_EQ(validate_geometry(g).empty(), oracle::is_geometry(g)) << "trial " << trial;
    }
}

TEST(GeometryProperty, RelabelPreservesValidityAndLattice) {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto l = fragment(2, 12, seed);
        std::vector<Vertex> perm(l.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin() + 2, perm.end(), rng);
        const auto g = relabel(l.geometry(), perm);
        EXPECT_TRUE(validate_geometry(g).empty());
        EXPECT_TRUE(is_lattice(g).is_lattice);
        for (Vertex x = 0; x < l.size(); ++x)
            for (Vertex y = 0; y < l.size(); ++y) EXPECT_EQ(l.less(x, y), g.less(perm[x], perm[y]));
    }
}

TEST(Geometry, InducedSubgeometryKeepsBounds) {
    const auto h = hexagon();
    const auto ind = induced_subgeometry(h, {0, 1, hex::a0, hex::b0});
    EXPECT_EQ(ind.geometry.size(), 4u);
    EXPECT_TRUE(ind.geometry.less(2, 3));
    EXPECT_THROW(induced_subgeometry(h, {0, hex::a0}), ContractError);
}
