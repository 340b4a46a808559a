#pragma once

// Brute-force reference implementations and small-structure enumeration.
//
// Nothing here calls into the zigzag, closure, independence or iso code:
// Geometry is used only as a relation table, and every predicate is
// re-derived from the definitions by exhaustive search.

#include "npspace/construction.hpp"
#include "npspace/error.hpp"
#include "npspace/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace npspace::oracle {

using Path = std::vector<Vertex>;

/// Relation table with naively computed meets and joins (kNone if absent).
class Table {
public:
    static constexpr Vertex kNone = static_cast<Vertex>(-1);

    explicit Table(const Geometry& g) : g_(g), n_(g.size()), meet_(n_ * n_, kNone), join_(n_ * n_, kNone) {
        for (Vertex x = 0; x < n_; ++x)
            for (Vertex y = 0; y < n_; ++y) {
                meet_[x * n_ + y] = bound(x, y, true);
                join_[x * n_ + y] = bound(x, y, false);
            }
    }

    std::size_t size() const { return n_; }
    bool lt(Vertex x, Vertex y) const { return g_.less(x, y); }
    bool le(Vertex x, Vertex y) const { return x == y || g_.less(x, y); }
    bool comp(Vertex x, Vertex y) const { return le(x, y) || le(y, x); }
    int layer(Vertex v) const { return g_.layer(v); }
    Vertex meet(Vertex x, Vertex y) const { return meet_[x * n_ + y]; }
    Vertex join(Vertex x, Vertex y) const { return join_[x * n_ + y]; }
    const Geometry& geometry() const { return g_; }

private:
    Vertex bound(Vertex x, Vertex y, bool lower) const {
        std::vector<Vertex> common;
        for (Vertex z = 0; z < n_; ++z)
            if (lower ? (le(z, x) && le(z, y)) : (le(x, z) && le(y, z))) common.push_back(z);
        for (Vertex z : common) {
            bool best = true;
            for (Vertex w : common) best = best && (lower ? le(w, z) : le(z, w));
            if (best) return z;
        }
        return kNone;
    }

    Geometry g_;
    std::size_t n_;
    std::vector<Vertex> meet_, join_;
};

// ---------------------------------------------------------------------------
// Axioms and lattice property

inline bool is_geometry(const Geometry& g) {
    const std::size_t n = g.size();
    if (n < 2) return false;
    for (Vertex x = 0; x < n; ++x) {
        if (g.less(x, x)) return false;
        const int l = g.layer(x);
        if (l < -1 || l > g.n() + 1) return false;
        if (x != kBottom && (l == -1 || !g.less(kBottom, x))) return false;
        if (x != kTop && (l == g.n() + 1 || !g.less(x, kTop))) return false;
        for (Vertex y = 0; y < n; ++y) {
            if (g.less(x, y) && g.layer(x) >= g.layer(y)) return false;
            for (Vertex z = 0; z < n; ++z)
                if (g.less(x, y) && g.less(y, z) && !g.less(x, z)) return false;
        }
    }
    return g.layer(kBottom) == -1 && g.layer(kTop) == g.n() + 1;
}

inline bool is_lattice(const Table& t) {
    for (Vertex x = 0; x < t.size(); ++x)
        for (Vertex y = 0; y < t.size(); ++y)
            if (t.meet(x, y) == Table::kNone || t.join(x, y) == Table::kNone) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Zigzags straight from the definition

/// Alternating with strict steps; every interior sink is the meet and every
/// interior peak the join of its two neighbours.
inline bool is_zigzag(const Table& t, const Path& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!t.lt(p[i], p[i + 1]) && !t.lt(p[i + 1], p[i])) return false;
        if (i > 0 && t.lt(p[i - 1], p[i]) == t.lt(p[i], p[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        const bool sink = t.lt(p[i], p[i - 1]);
        if (p[i] != (sink ? t.meet(p[i - 1], p[i + 1]) : t.join(p[i - 1], p[i + 1]))) return false;
    }
    return true;
}

/// Calls visit(path) on every zigzag from x of length <= max_len. Paths are
/// vertex-distinct unless `repeats` is set. Returning false from visit stops
/// the search; the function then returns false.
inline bool for_each_zigzag(const Table& t, Vertex x, std::size_t max_len, bool repeats,
                            const std::function<bool(const Path&)>& visit) {
    Path p{x};
    std::function<bool()> rec = [&]() -> bool {
        if (!visit(p)) return false;
        if (p.size() > max_len) return true;
        for (Vertex y = 0; y < t.size(); ++y) {
            if (!repeats && std::find(p.begin(), p.end(), y) != p.end()) continue;
            p.push_back(y);
            const std::size_t k = p.size();
            bool ok = t.lt(p[k - 2], y) || t.lt(y, p[k - 2]);
            if (ok && k >= 3) {
                const Vertex a = p[k - 3], m = p[k - 2];
                const bool sink = t.lt(m, a);
                ok = (sink ? t.lt(m, y) : t.lt(y, m)) && m == (sink ? t.meet(a, y) : t.join(a, y));
            }
            if (ok && !rec()) return false;
            p.pop_back();
        }
        return true;
    };
    return rec();
}

inline std::vector<Path> zigzags(const Table& t, Vertex x, Vertex y, std::size_t max_len, bool repeats = false) {
    std::vector<Path> out;
    for_each_zigzag(t, x, max_len, repeats, [&](const Path& p) {
        if (p.back() == y) out.push_back(p);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Simple connectivity three ways

/// Closed zigzag a0, b0, ..., a(n-1), b(n-1) read cyclically, vertices may
/// repeat, at most `max_peaks` peaks.
inline std::optional<Path> zigzag_cycle(const Table& t, std::size_t max_peaks) {
    Path p;
    std::optional<Path> found;
    std::function<bool()> rec = [&]() -> bool {
        const std::size_t k = p.size();  // p = a0 b0 ... ; last is a peak when k is even
        if (k % 2 == 0) {
            // try closing: a0 after the last peak
            const Vertex b = p[k - 1], a = p[k - 2], a0 = p[0];
            if (k >= 4 && t.lt(a0, b) && b == t.join(a, a0) && a0 == t.meet(b, p[1])) {
                found = p;
                return true;
            }
            if (k / 2 >= max_peaks) return false;
            for (Vertex y = 0; y < t.size(); ++y) {
                if (!t.lt(y, b) || b != t.join(a, y)) continue;
                p.push_back(y);
                if (rec()) return true;
                p.pop_back();
            }
            return false;
        }
        const Vertex a = p[k - 1];
        for (Vertex y = 0; y < t.size(); ++y) {
            if (!t.lt(a, y)) continue;
            if (k >= 3 && a != t.meet(p[k - 2], y)) continue;
            p.push_back(y);
            if (rec()) return true;
            p.pop_back();
        }
        return false;
    };
    for (Vertex a0 = 0; a0 < t.size(); ++a0) {
        p.assign(1, a0);
        if (rec()) return found;
    }
    return std::nullopt;
}

struct ThreeWay {
    bool no_cycles = true;
    bool endpoints_incomparable = true;
    bool within_bounds = true;
    std::optional<Path> cycle;
    bool agree() const { return no_cycles == endpoints_incomparable && no_cycles == within_bounds; }
};

/// Evaluates the three equivalent conditions independently. Zigzags may
/// repeat vertices and are searched up to length 2|V|; cycles up to |V| peaks.
inline ThreeWay simply_connected_3way(const Geometry& g) {
    const Table t(g);
    if (!is_lattice(t)) throw ContractError("simply_connected_3way: not a lattice");
    ThreeWay r;
    r.cycle = zigzag_cycle(t, t.size());
    r.no_cycles = !r.cycle.has_value();
    const std::size_t bound = 2 * t.size();
    for (Vertex x = 0; x < t.size(); ++x)
        for_each_zigzag(t, x, bound, true, [&](const Path& p) {
            if (p.size() < 2) return true;
            const Vertex lo = t.meet(p.front(), p.back()), hi = t.join(p.front(), p.back());
            if (p.size() >= 3 && t.comp(p.front(), p.back())) r.endpoints_incomparable = false;
            for (Vertex v : p)
                if (!t.le(lo, v) || !t.le(v, hi)) r.within_bounds = false;
            return r.endpoints_incomparable || r.within_bounds;
        });
    return r;
}

// ---------------------------------------------------------------------------
// Closure, direct paths, gates, independence

inline bool is_closed(const Table& t, const VertexSet& s) {
    if (!s.contains(kBottom) || !s.contains(kTop)) return false;
    for (Vertex x : s)
        for (Vertex y : s)
            for (const auto& p : zigzags(t, x, y, t.size()))
                for (Vertex v : p)
                    if (!s.contains(v)) return false;
    return true;
}

/// Adds interiors of zigzags between members until nothing changes.
inline VertexSet closure(const Table& t, VertexSet s) {
    s.insert(kBottom);
    s.insert(kTop);
    for (bool grew = true; grew;) {
        grew = false;
        const VertexSet cur = s;
        for (Vertex x : cur)
            for_each_zigzag(t, x, t.size(), false, [&](const Path& p) {
                if (cur.contains(p.back()))
                    for (Vertex v : p) grew = s.insert(v).second || grew;
                return true;
            });
    }
    return s;
}

inline bool interval_hits(const Table& t, Vertex u, Vertex v, const VertexSet& a) {
    for (Vertex w : a)
        if ((t.lt(u, w) && t.lt(w, v)) || (t.lt(v, w) && t.lt(w, u))) return true;
    return false;
}

inline std::vector<Path> direct_paths(const Table& t, Vertex x, const VertexSet& a) {
    if (a.contains(x)) return {Path{x}};
    std::vector<Path> out;
    for_each_zigzag(t, x, t.size(), false, [&](const Path& p) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (a.contains(p[i])) return true;
        if (p.size() >= 2 && a.contains(p.back()) && !interval_hits(t, p[p.size() - 2], p.back(), a))
            out.push_back(p);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::optional<std::size_t> delta(const Table& t, Vertex x, const VertexSet& a) {
    std::optional<std::size_t> best;
    for (const auto& p : direct_paths(t, x, a))
        if (p.size() >= 3 && (!best || p.size() - 1 < *best)) best = p.size() - 1;
    return best;
}

inline VertexSet gate(const Table& t, const VertexSet& xs, const VertexSet& a) {
    VertexSet out;
    for (Vertex x : xs)
        for (const auto& p : direct_paths(t, x, a)) out.insert(p.back());
    return out;
}

inline Vertex floor_of(const Table& t, const VertexSet& a, Vertex x) {
    std::vector<Vertex> below;
    for (Vertex y : a)
        if (t.le(y, x)) below.push_back(y);
    for (Vertex y : below)
        if (std::all_of(below.begin(), below.end(), [&](Vertex z) { return t.le(z, y); })) return y;
    throw ContractError("oracle::floor_of: no maximum");
}

inline Vertex ceil_of(const Table& t, const VertexSet& a, Vertex x) {
    std::vector<Vertex> above;
    for (Vertex y : a)
        if (t.le(x, y)) above.push_back(y);
    for (Vertex y : above)
        if (std::all_of(above.begin(), above.end(), [&](Vertex z) { return t.le(y, z); })) return y;
    throw ContractError("oracle::ceil_of: no minimum");
}

/// Every zigzag from cl(AB) \ cl(B) to cl(BC) has a vertex in cl(B) or an
/// open interval between consecutive vertices meeting cl(B).
inline bool independent(const Table& t, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
    const VertexSet cb = closure(t, b);
    VertexSet ab = a, bc = c;
    ab.insert(b.begin(), b.end());
    bc.insert(b.begin(), b.end());
    const VertexSet ca = closure(t, ab), cc = closure(t, bc);
    for (Vertex x : ca) {
        if (cb.contains(x)) continue;
        const bool ok = for_each_zigzag(t, x, t.size(), false, [&](const Path& p) {
            if (!cc.contains(p.back())) return true;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (cb.contains(p[i])) return true;
                if (i + 1 < p.size() && interval_hits(t, p[i], p[i + 1], cb)) return true;
            }
            return false;
        });
        if (!ok) return false;
    }
    return true;
}

/// Bijective, layer- and order-preserving, with closed domain and codomain.
inline bool is_iso(const Table& src, const Table& dst, const std::map<Vertex, Vertex>& f) {
    VertexSet dom, cod;
    for (auto [x, y] : f) {
        if (src.layer(x) != dst.layer(y)) return false;
        dom.insert(x);
        cod.insert(y);
    }
    if (cod.size() != dom.size()) return false;
    for (auto [x1, y1] : f)
        for (auto [x2, y2] : f)
            if (src.lt(x1, x2) != dst.lt(y1, y2)) return false;
    return is_closed(src, dom) && is_closed(dst, cod);
}

// ---------------------------------------------------------------------------
// Enumeration up to isomorphism

/// A finite strict order on 0..size-1, optionally layered.
struct Structure {
    std::size_t size = 0;
    std::vector<std::vector<char>> lt;
    int n = -1;               // N for layered structures, -1 otherwise
    std::vector<int> layers;  // empty unless layered

    Geometry to_geometry() const {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex x = 0; x < size; ++x)
            for (Vertex y = 0; y < size; ++y)
                if (lt[x][y]) pairs.emplace_back(x, y);
        return Geometry::from_relation(n, layers, pairs, false);
    }
};

enum class Kind { AllPosets, Lattices, NGeometryLattices };

struct EnumerationSpec {
    std::size_t vertices = 0;  // exact count
    Kind kind = Kind::AllPosets;
    int n = 1;
};

inline constexpr std::size_t kExhaustiveBound = 8;

namespace detail {

/// Canonical code: colour refinement on (colour, down-colours, up-colours),
/// then the least adjacency string over orderings that respect the sorted
/// colour classes.
inline std::vector<int> canonical_code(const Structure& s, std::vector<int>* order_out = nullptr) {
    const std::size_t n = s.size;
    std::vector<int> colour(n, 0);
    if (!s.layers.empty())
        for (std::size_t v = 0; v < n; ++v) colour[v] = s.layers[v] + 1;
    for (std::size_t round = 0; round < n + 1; ++round) {
        std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> dn, up;
            for (std::size_t w = 0; w < n; ++w) {
                if (s.lt[w][v]) dn.push_back(colour[w]);
                if (s.lt[v][w]) up.push_back(colour[w]);
            }
            std::sort(dn.begin(), dn.end());
            std::sort(up.begin(), up.end());
            sig[v] = {colour[v], dn, up};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (std::size_t v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == colour) break;
        colour = next;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return std::pair(colour[a], a) < std::pair(colour[b], b); });

    auto encode = [&](const std::vector<int>& ord) {
        std::vector<int> code;
        code.reserve(n * n + n);
        for (int v : ord) code.push_back(colour[v]);
        for (int x : ord)
            for (int y : ord) code.push_back(s.lt[x][y]);
        return code;
    };
    std::vector<int> best;
    std::vector<int> best_order;
    // permute within each colour class
    std::vector<std::pair<std::size_t, std::size_t>> classes;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
        if (ci == classes.size()) {
            auto code = encode(order);
            if (best.empty() || code < best) {
                best = std::move(code);
                best_order = order;
            }
            return;
        }
        auto [lo, hi] = classes[ci];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(ci + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    if (order_out) *order_out = best_order;
    return best;
}

inline Structure relabelled(const Structure& s, const std::vector<int>& order) {
    Structure out = s;
    for (std::size_t i = 0; i < s.size; ++i) {
        for (std::size_t j = 0; j < s.size; ++j) out.lt[i][j] = s.lt[order[i]][order[j]];
        if (!s.layers.empty()) out.layers[i] = s.layers[order[i]];
    }
    return out;
}

/// Adds a maximal element on top of every down-closed subset.
inline std::vector<Structure> extend_posets(const std::vector<Structure>& smaller) {
    std::map<std::vector<int>, Structure> seen;
    for (const auto& p : smaller) {
        const std::size_t n = p.size;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool down_closed = true;
            for (std::size_t v = 0; v < n && down_closed; ++v)
                if (mask >> v & 1)
                    for (std::size_t w = 0; w < n; ++w)
                        if (p.lt[w][v] && !(mask >> w & 1)) down_closed = false;
            if (!down_closed) continue;
            Structure q;
            q.size = n + 1;
            q.lt.assign(n + 1, std::vector<char>(n + 1, 0));
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t w = 0; w < n; ++w) q.lt[v][w] = p.lt[v][w];
                q.lt[v][n] = (mask >> v) & 1;
            }
            std::vector<int> ord;
            auto code = canonical_code(q, &ord);
            if (!seen.contains(code)) seen.emplace(std::move(code), relabelled(q, ord));
        }
    }
    std::vector<Structure> out;
    for (auto& [code, s] : seen) out.push_back(std::move(s));
    return out;
}

/// Bounds bottom = 0 and top = 1 around a poset on 2..size+1.
inline Structure bounded(const Structure& p) {
    Structure q;
    q.size = p.size + 2;
    q.lt.assign(q.size, std::vector<char>(q.size, 0));
    q.lt[kBottom][kTop] = 1;
    for (std::size_t v = 0; v < p.size; ++v) {
        q.lt[kBottom][v + 2] = 1;
        q.lt[v + 2][kTop] = 1;
        for (std::size_t w = 0; w < p.size; ++w) q.lt[v + 2][w + 2] = p.lt[v][w];
    }
    return q;
}

inline bool bounded_is_lattice(const Structure& q) {
    const std::size_t n = q.size;
    auto le = [&](std::size_t x, std::size_t y) { return x == y || q.lt[x][y]; };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (bool lower : {true, false}) {
                std::vector<std::size_t> common;
                for (std::size_t z = 0; z < n; ++z)
                    if (lower ? le(z, x) && le(z, y) : le(x, z) && le(y, z)) common.push_back(z);
                bool has = false;
                for (std::size_t z : common) {
                    bool best = true;
                    for (std::size_t w : common) best = best && (lower ? le(w, z) : le(z, w));
                    has = has || best;
                }
                if (!has) return false;
            }
    return true;
}

} // namespace detail

/// Unlabelled posets on exactly k elements, deterministic order.
inline std::vector<Structure> posets(std::size_t k) {
    std::vector<Structure> level{Structure{}};
    for (std::size_t i = 0; i < k; ++i) level = detail::extend_posets(level);
    return level;
}

/// Unlabelled lattices on exactly k elements. For k >= 2, bottom is 0 and
/// top is 1.
inline std::vector<Structure> lattices(std::size_t k) {
    if (k == 0) return {};
    if (k == 1) {
        Structure s;
        s.size = 1;
        s.lt.assign(1, std::vector<char>(1, 0));
        return {s};
    }
    std::vector<Structure> out;
    for (const auto& p : posets(k - 2)) {
        auto q = detail::bounded(p);
        if (detail::bounded_is_lattice(q)) out.push_back(std::move(q));
    }
    return out;
}

/// Lattice N-geometries on exactly k vertices up to layer-preserving
/// isomorphism. Bottom is 0 and top is 1 in every output.
inline std::vector<Geometry> geometry_lattices(std::size_t k, int n) {
    std::vector<Geometry> out;
    if (k < 2 || n < 0) return out;
    std::map<std::vector<int>, Structure> seen;
    for (const auto& q : lattices(k)) {
        Structure s = q;
        s.n = n;
        s.layers.assign(k, 0);
        s.layers[kBottom] = -1;
        s.layers[kTop] = n + 1;
        std::function<void(std::size_t)> rec = [&](std::size_t v) {
            if (v == k) {
                // canonicalise the proper part, keeping the bounds in front
                std::vector<int> ord;
                auto code = detail::canonical_code(s, &ord);
                if (!seen.contains(code)) seen.emplace(std::move(code), detail::relabelled(s, ord));
                return;
            }
            for (int l = 0; l <= n; ++l) {
                bool ok = true;
                for (std::size_t w = 2; w < v && ok; ++w)
                    if ((s.lt[w][v] && s.layers[w] >= l) || (s.lt[v][w] && l >= s.layers[w])) ok = false;
                if (!ok) continue;
                s.layers[v] = l;
                rec(v + 1);
            }
        };
        rec(2);
    }
    for (auto& [code, s] : seen) {
        // colour classes start with bottom (layer -1) and end with top (N+1);
        // move top to id 1
        std::vector<int> ord(s.size);
        ord[0] = 0;
        ord[1] = static_cast<int>(s.size) - 1;
        for (std::size_t i = 2; i < s.size; ++i) ord[i] = static_cast<int>(i) - 1;
        out.push_back(detail::relabelled(s, ord).to_geometry());
    }
    return out;
}

/// Canonical code of a geometry under layer-preserving isomorphism.
inline std::vector<int> canonical_code(const Geometry& g) {
    Structure s;
    s.size = g.size();
    s.n = g.n();
    s.layers = g.layers();
    s.lt.assign(s.size, std::vector<char>(s.size, 0));
    for (auto [x, y] : g.relation()) s.lt[x][y] = 1;
    return detail::canonical_code(s);
}

/// Known numbers of unlabelled posets, for the refusal message.
inline std::string enumeration_cost(std::size_t k) {
    static const std::uint64_t counts[] = {1, 1, 2, 5, 16, 63, 318, 2045, 16999, 183231, 2567284, 46749427,
                                           1104891746};
    const std::string what = k < std::size(counts) ? std::to_string(counts[k]) : "more than 10^9";
    return "about " + what + " unlabelled posets on " + std::to_string(k) + " elements, each canonicalised";
}

inline std::vector<Structure> enumerate_structures(const EnumerationSpec& spec) {
    if (spec.vertices > kExhaustiveBound)
        throw InputError("enumeration is capped at " + std::to_string(kExhaustiveBound) + " vertices; " +
                         std::to_string(spec.vertices) + " would cost " + enumeration_cost(spec.vertices));
    switch (spec.kind) {
    case Kind::AllPosets: return posets(spec.vertices);
    case Kind::Lattices: return lattices(spec.vertices);
    case Kind::NGeometryLattices: {
        std::vector<Structure> out;
        for (const auto& g : geometry_lattices(spec.vertices, spec.n)) {
            Structure s;
            s.size = g.size();
            s.n = g.n();
            s.layers = g.layers();
            s.lt.assign(s.size, std::vector<char>(s.size, 0));
            for (auto [x, y] : g.relation()) s.lt[x][y] = 1;
            out.push_back(std::move(s));
        }
        return out;
    }
    }
    throw InputError("unknown enumeration kind");
}

// ---------------------------------------------------------------------------
// Test inputs

/// A seeded random constructible fragment.
inline Geometry random_fragment(int n, std::size_t steps, std::uint64_t seed) {
    return build_universal({n, steps, seed, Policy::SeededRandom}).first.geometry();
}

} // namespace npspace::oracle
