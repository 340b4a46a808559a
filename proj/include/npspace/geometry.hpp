#pragma once

// Finite layered partial orders (N-geometries): storage, axiom checks and
// the elementary order queries everything else is built on.

#include "npspace/error.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace npspace {

using Vertex = std::uint32_t;
using VertexSet = std::set<Vertex>;

inline constexpr Vertex kBottom = 0;
inline constexpr Vertex kTop = 1;

/// A finite strict partial order with a layer index on every vertex.
///
/// The order is kept as the full relation, not as covers, so comparability is
/// a table lookup. Nothing here enforces the N-geometry axioms; arbitrary
/// (even non-transitive) relations can be represented so that
/// validate_geometry() has something to report on.
class Geometry {
public:
    Geometry() : Geometry(0) {}

    /// The two-element geometry {bottom, top} with parameter n.
    explicit Geometry(int n) : n_(n) {
        if (n < 0) throw InputError("geometry parameter N must be >= 0");
        add_vertex(-1);
        add_vertex(n + 1);
        relate(kBottom, kTop);
    }

    /// Builds a geometry from a layer table and a list of (lower, upper) pairs.
    /// With `close` set the transitive closure of the pairs is taken.
    static Geometry from_relation(int n, std::span<const int> layers,
                                  std::span<const std::pair<Vertex, Vertex>> pairs,
                                  bool close = true) {
        if (n < 0) throw InputError("geometry parameter N must be >= 0");
        Geometry g;
        g.n_ = n;
        g.layer_.clear();
        g.lt_.clear();
        for (int layer : layers) g.add_vertex(layer);
        for (auto [lo, hi] : pairs) {
            g.check(lo);
            g.check(hi);
            g.relate(lo, hi);
        }
        if (close) g.close_transitively();
        return g;
    }

    int n() const { return n_; }
    std::size_t size() const { return layer_.size(); }
    bool contains(Vertex v) const { return v < size(); }

    int layer(Vertex v) const { return layer_[check(v)]; }
    const std::vector<int>& layers() const { return layer_; }

    bool less(Vertex x, Vertex y) const { return lt_[check(x)][check(y)] != 0; }
    bool leq(Vertex x, Vertex y) const { return x == y ? (check(x), true) : less(x, y); }
    bool comparable(Vertex x, Vertex y) const { return leq(x, y) || leq(y, x); }

    /// Appends a vertex with no relations and returns its id.
    Vertex add_vertex(int layer) {
        for (auto& row : lt_) row.push_back(0);
        lt_.emplace_back(layer_.size() + 1, 0);
        layer_.push_back(layer);
        return static_cast<Vertex>(layer_.size() - 1);
    }

    /// Records x < y without closing transitively.
    void relate(Vertex x, Vertex y) { lt_[check(x)][check(y)] = 1; }

    void close_transitively() {
        const std::size_t n = size();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (lt_[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (lt_[k][j]) lt_[i][j] = 1;
    }

    /// Strict order pairs in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> relation() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex x = 0; x < size(); ++x)
            for (Vertex y = 0; y < size(); ++y)
                if (lt_[x][y]) out.emplace_back(x, y);
        return out;
    }

    /// Cover pairs (x < y with nothing strictly between), lexicographic.
    std::vector<std::pair<Vertex, Vertex>> covers() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (auto [x, y] : relation()) {
            bool cover = true;
            for (Vertex z = 0; z < size() && cover; ++z)
                if (lt_[x][z] && lt_[z][y]) cover = false;
            if (cover) out.emplace_back(x, y);
        }
        return out;
    }

    friend bool operator==(const Geometry&, const Geometry&) = default;

private:
    Vertex check(Vertex v) const {
        if (v >= layer_.size())
            throw InputError("unknown vertex id " + std::to_string(v));
        return v;
    }

    int n_ = 0;
    std::vector<int> layer_;
    std::vector<std::vector<std::uint8_t>> lt_;
};

// ---------------------------------------------------------------------------
// Axiom validation

enum class AxiomKind {
    MissingBounds,
    Irreflexivity,
    Transitivity,
    LayerRange,
    LayerMonotonicity,
    BottomLayer,
    TopLayer,
    BottomNotLeast,
    TopNotGreatest,
    ExtremeLayerNotUnique,
};

inline const char* to_string(AxiomKind k) {
    switch (k) {
    case AxiomKind::MissingBounds: return "missing-bounds";
    case AxiomKind::Irreflexivity: return "irreflexivity";
    case AxiomKind::Transitivity: return "transitivity";
    case AxiomKind::LayerRange: return "layer-range";
    case AxiomKind::LayerMonotonicity: return "layer-monotonicity";
    case AxiomKind::BottomLayer: return "bottom-layer";
    case AxiomKind::TopLayer: return "top-layer";
    case AxiomKind::BottomNotLeast: return "bottom-not-least";
    case AxiomKind::TopNotGreatest: return "top-not-greatest";
    case AxiomKind::ExtremeLayerNotUnique: return "extreme-layer-not-unique";
    }
    return "unknown";
}

struct Violation {
    AxiomKind kind;
    std::vector<Vertex> witness;
    friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

/// Lists every violated N-geometry axiom with a witness tuple. Empty iff `g`
/// is an N-geometry.
inline ValidationReport validate_geometry(const Geometry& g) {
    ValidationReport report;
    const Vertex n = static_cast<Vertex>(g.size());
    if (n < 2) {
        report.push_back({AxiomKind::MissingBounds, {}});
        return report;
    }
    for (Vertex x = 0; x < n; ++x)
        if (g.less(x, x)) report.push_back({AxiomKind::Irreflexivity, {x}});
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            if (g.less(x, y))
                for (Vertex z = 0; z < n; ++z)
                    if (g.less(y, z) && !g.less(x, z))
                        report.push_back({AxiomKind::Transitivity, {x, y, z}});
    for (Vertex x = 0; x < n; ++x)
        if (g.layer(x) < -1 || g.layer(x) > g.n() + 1)
            report.push_back({AxiomKind::LayerRange, {x}});
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            if (x != y && g.less(x, y) && g.layer(x) >= g.layer(y))
                report.push_back({AxiomKind::LayerMonotonicity, {x, y}});
    if (g.layer(kBottom) != -1) report.push_back({AxiomKind::BottomLayer, {kBottom}});
    if (g.layer(kTop) != g.n() + 1) report.push_back({AxiomKind::TopLayer, {kTop}});
    for (Vertex v = 0; v < n; ++v) {
        if (v != kBottom && !g.less(kBottom, v))
            report.push_back({AxiomKind::BottomNotLeast, {v}});
        if (v != kTop && !g.less(v, kTop))
            report.push_back({AxiomKind::TopNotGreatest, {v}});
        if (v != kBottom && v != kTop && (g.layer(v) == -1 || g.layer(v) == g.n() + 1))
            report.push_back({AxiomKind::ExtremeLayerNotUnique, {v}});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Lattice operations on a bare geometry (linear scans; see Lattice for tables)

inline std::optional<Vertex> meet(const Geometry& g, Vertex x, Vertex y) {
    std::vector<Vertex> lower;
    for (Vertex z = 0; z < g.size(); ++z)
        if (g.leq(z, x) && g.leq(z, y)) lower.push_back(z);
    for (Vertex m : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](Vertex z) { return g.leq(z, m); }))
            return m;
    return std::nullopt;
}

inline std::optional<Vertex> join(const Geometry& g, Vertex x, Vertex y) {
    std::vector<Vertex> upper;
    for (Vertex z = 0; z < g.size(); ++z)
        if (g.leq(x, z) && g.leq(y, z)) upper.push_back(z);
    for (Vertex j : upper)
        if (std::all_of(upper.begin(), upper.end(), [&](Vertex z) { return g.leq(j, z); }))
            return j;
    return std::nullopt;
}

struct LatticeReport {
    bool is_lattice = true;
    std::optional<std::pair<Vertex, Vertex>> witness;
};

/// Checks that every pair has a meet and a join. The witness is the first
/// failing pair in id order.
inline LatticeReport is_lattice(const Geometry& g) {
    if (!validate_geometry(g).empty()) throw InputError("is_lattice: not an N-geometry");
    for (Vertex x = 0; x < g.size(); ++x)
        for (Vertex y = x + 1; y < g.size(); ++y)
            if (!meet(g, x, y) || !join(g, x, y)) return {false, std::pair{x, y}};
    return {};
}

/// {x | a < x < b}, orientation-insensitive; empty for incomparable ends.
inline VertexSet open_interval(const Geometry& g, Vertex a, Vertex b) {
    if (g.less(b, a)) std::swap(a, b);
    VertexSet out;
    if (!g.less(a, b)) return out;
    for (Vertex x = 0; x < g.size(); ++x)
        if (g.less(a, x) && g.less(x, b)) out.insert(x);
    return out;
}

inline VertexSet closed_interval(const Geometry& g, Vertex a, Vertex b) {
    if (g.less(b, a)) std::swap(a, b);
    if (!g.leq(a, b)) return {};
    VertexSet out = open_interval(g, a, b);
    out.insert(a);
    out.insert(b);
    return out;
}

// ---------------------------------------------------------------------------
// Structural helpers

/// Renames vertices: vertex v of `g` becomes perm[v]. perm must be a
/// permutation fixing bottom and top.
inline Geometry relabel(const Geometry& g, std::span<const Vertex> perm) {
    if (perm.size() != g.size()) throw InputError("relabel: permutation size mismatch");
    std::vector<int> layers(g.size());
    std::vector<char> seen(g.size(), 0);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (perm[v] >= g.size() || seen[perm[v]]) throw InputError("relabel: not a permutation");
        seen[perm[v]] = 1;
        layers[perm[v]] = g.layer(v);
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (auto [x, y] : g.relation()) pairs.emplace_back(perm[x], perm[y]);
    return Geometry::from_relation(g.n(), layers, pairs, false);
}

/// The induced subgeometry on `keep`, renumbered in ascending id order.
/// `keep` must contain bottom and top so they stay at ids 0 and 1.
struct Induced {
    Geometry geometry;
    std::vector<Vertex> to_parent;
};

inline Induced induced_subgeometry(const Geometry& g, const VertexSet& keep) {
    if (!keep.contains(kBottom) || !keep.contains(kTop))
        throw ContractError("induced_subgeometry: subset must contain bottom and top");
    std::vector<Vertex> to_parent(keep.begin(), keep.end());
    std::vector<int> layers;
    for (Vertex v : to_parent) layers.push_back(g.layer(v));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < to_parent.size(); ++i)
        for (Vertex j = 0; j < to_parent.size(); ++j)
            if (g.less(to_parent[i], to_parent[j])) pairs.emplace_back(i, j);
    return {Geometry::from_relation(g.n(), layers, pairs, false), std::move(to_parent)};
}

} // namespace npspace
