#pragma once

#include "npspace/geometry.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace npspace {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// An N-geometry that is a lattice, with meet and join tabulated.
///
/// Construction validates the axioms and the lattice property and throws
/// ContractError otherwise. Instances are immutable; growth goes through
/// with_simple_extension(), which updates the tables in O(|V|).
class Lattice {
public:
    explicit Lattice(Geometry g) : g_(std::move(g)) {
        if (auto report = validate_geometry(g_); !report.empty())
            throw ContractError(std::string("not an N-geometry: ") + to_string(report.front().kind));
        const std::size_t n = g_.size();
        meet_.assign(n * n, kNoVertex);
        join_.assign(n * n, kNoVertex);
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x; y < n; ++y) {
                auto m = npspace::meet(g_, x, y);
                auto j = npspace::join(g_, x, y);
                if (!m || !j)
                    throw ContractError("not a lattice: pair (" + std::to_string(x) + "," +
                                        std::to_string(y) + ") lacks a " + (m ? "join" : "meet"));
                meet_[x * n + y] = meet_[y * n + x] = *m;
                join_[x * n + y] = join_[y * n + x] = *j;
            }
        rebuild_neighbourhoods();
    }

    const Geometry& geometry() const { return g_; }
    std::size_t size() const { return g_.size(); }
    int n() const { return g_.n(); }
    int layer(Vertex v) const { return g_.layer(v); }
    bool less(Vertex x, Vertex y) const { return g_.less(x, y); }
    bool leq(Vertex x, Vertex y) const { return g_.leq(x, y); }
    bool comparable(Vertex x, Vertex y) const { return g_.comparable(x, y); }

    Vertex meet(Vertex x, Vertex y) const { return meet_[index(x, y)]; }
    Vertex join(Vertex x, Vertex y) const { return join_[index(x, y)]; }

    /// Strictly smaller / strictly larger vertices, ascending ids.
    const std::vector<Vertex>& below(Vertex v) const { return below_[v]; }
    const std::vector<Vertex>& above(Vertex v) const { return above_[v]; }

    /// The lattice obtained by adjoining a vertex x in layer s with
    /// c < x iff c <= lo and x < c iff hi <= c. The caller checks the type.
    Lattice with_simple_extension(Vertex lo, Vertex hi, int s) const {
        Lattice out = *this;
        Geometry& g = out.g_;
        const Vertex x = g.add_vertex(s);
        for (Vertex c = 0; c < x; ++c) {
            if (g.leq(c, lo)) g.relate(c, x);
            if (g.leq(hi, c)) g.relate(x, c);
        }
        const std::size_t old_n = size();
        const std::size_t n = old_n + 1;
        std::vector<Vertex> meets(n * n), joins(n * n);
        for (Vertex a = 0; a < old_n; ++a)
            for (Vertex b = 0; b < old_n; ++b) {
                meets[a * n + b] = meet_[a * old_n + b];
                joins[a * n + b] = join_[a * old_n + b];
            }
        for (Vertex c = 0; c < n; ++c) {
            // Lower bounds of x other than x itself are exactly those of lo.
            const Vertex m = c == x ? x : (g.less(x, c) ? x : meets[lo * n + c]);
            const Vertex j = c == x ? x : (g.less(c, x) ? x : joins[hi * n + c]);
            meets[x * n + c] = meets[c * n + x] = m;
            joins[x * n + c] = joins[c * n + x] = j;
        }
        out.meet_ = std::move(meets);
        out.join_ = std::move(joins);
        out.rebuild_neighbourhoods();
        return out;
    }

private:
    std::size_t index(Vertex x, Vertex y) const {
        if (x >= size() || y >= size())
            throw InputError("unknown vertex id " + std::to_string(std::max(x, y)));
        return x * size() + y;
    }

    void rebuild_neighbourhoods() {
        const std::size_t n = g_.size();
        below_.assign(n, {});
        above_.assign(n, {});
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y)
                if (g_.less(x, y)) {
                    below_[y].push_back(x);
                    above_[x].push_back(y);
                }
    }

    Geometry g_;
    std::vector<Vertex> meet_;
    std::vector<Vertex> join_;
    std::vector<std::vector<Vertex>> below_;
    std::vector<std::vector<Vertex>> above_;
};

/// Membership mask over the vertices of a geometry.
inline std::vector<char> mask_of(std::size_t n, const VertexSet& s) {
    std::vector<char> m(n, 0);
    for (Vertex v : s) {
        if (v >= n) throw InputError("unknown vertex id " + std::to_string(v));
        m[v] = 1;
    }
    return m;
}

} // namespace npspace
