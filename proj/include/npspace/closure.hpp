#pragma once

// Closed sets, closure, direct paths, floors and ceilings, and finite
// construction orders of closed extensions.
//
// All searches enumerate vertex-distinct zigzags. In a simply connected
// lattice every zigzag is vertex-distinct, so the results are exact there;
// on other inputs they are only defined as far as stated per function.

#include "npspace/error.hpp"
#include "npspace/extension.hpp"
#include "npspace/geometry.hpp"
#include "npspace/lattice.hpp"
#include "npspace/verdict.hpp"
#include "npspace/zigzag.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace npspace {

/// A vertex set that contains bottom and top and every zigzag between two
/// of its members.
class ClosedSubset {
public:
    ClosedSubset() : verts_{kBottom, kTop} {}

    /// Checks closedness; throws ContractError carrying the witness otherwise.
    static ClosedSubset verify(const Lattice& l, VertexSet s);

    /// No check. For sets closed by construction.
    static ClosedSubset assume_closed(VertexSet s) {
        ClosedSubset c;
        c.verts_ = std::move(s);
        return c;
    }

    const VertexSet& vertices() const { return verts_; }
    bool contains(Vertex v) const { return verts_.contains(v); }
    std::size_t size() const { return verts_.size(); }
    auto begin() const { return verts_.begin(); }
    auto end() const { return verts_.end(); }

    friend bool operator==(const ClosedSubset&, const ClosedSubset&) = default;

private:
    VertexSet verts_;
};

inline std::string to_string(std::span<const Vertex> vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "]";
}

// ---------------------------------------------------------------------------
// Closedness

/// Zigzag sweep: looks for a zigzag of length >= 2 whose endpoints lie in S
/// and whose interior avoids S. Any zigzag leaving S contains such a
/// segment. The witness is the lexicographically least one.
inline Verdict is_closed(const Lattice& l, const VertexSet& s) {
    if (!s.contains(kBottom) || !s.contains(kTop)) return Verdict::no({}, "bounds");
    const auto in = mask_of(l.size(), s);
    std::vector<Vertex> witness;
    for (Vertex u : s) {
        walk_zigzags(l, u, l.size(), [&](std::span<const Vertex> p) {
            if (p.size() == 1 || !in[p.back()]) return Walk::Descend;
            if (p.size() >= 3) {
                witness.assign(p.begin(), p.end());
                return Walk::Stop;
            }
            return Walk::Skip;
        });
        if (!witness.empty()) return Verdict::no(std::move(witness), "zigzag");
    }
    return Verdict::yes();
}

inline ClosedSubset ClosedSubset::verify(const Lattice& l, VertexSet s) {
    if (auto v = is_closed(l, s); !v)
        throw ContractError("set is not closed: " + v.reason + " " + to_string(v.witness));
    return assume_closed(std::move(s));
}

// ---------------------------------------------------------------------------
// Floors and ceilings

/// max{y in A | y <= x}; exists because A is a sublattice containing bottom.
inline Vertex floor_of(const Lattice& l, const ClosedSubset& a, Vertex x) {
    Vertex m = kBottom;
    for (Vertex y : a)
        if (l.leq(y, x)) m = l.join(m, y);
    return m;
}

/// min{y in A | x <= y}.
inline Vertex ceil_of(const Lattice& l, const ClosedSubset& a, Vertex x) {
    Vertex m = kTop;
    for (Vertex y : a)
        if (l.leq(x, y)) m = l.meet(m, y);
    return m;
}

/// Layer distance between ceiling and floor of x over A.
inline int layer_gap(const Lattice& l, const ClosedSubset& a, Vertex x) {
    return l.layer(ceil_of(l, a, x)) - l.layer(floor_of(l, a, x));
}

// ---------------------------------------------------------------------------
// Direct paths

/// A zigzag x0 ... xn with only xn in the target set and no target element
/// strictly between x(n-1) and xn.
struct DirectPath {
    std::vector<Vertex> verts;
    std::size_t length() const { return verts.size() - 1; }
    Vertex end() const { return verts.back(); }
    friend bool operator==(const DirectPath&, const DirectPath&) = default;
};

namespace detail {

inline bool interval_meets(const Lattice& l, Vertex u, Vertex v, const std::vector<char>& in) {
    if (l.less(v, u)) std::swap(u, v);
    for (Vertex w : l.above(u))
        if (in[w] && l.less(w, v)) return true;
    return false;
}

/// Calls f(path) for every direct path from x (not in A) to A.
template <class F>
void for_each_direct_path(const Lattice& l, Vertex x, const std::vector<char>& in, F&& f) {
    walk_zigzags(l, x, l.size(), [&](std::span<const Vertex> p) {
        if (p.size() == 1 || !in[p.back()]) return Walk::Descend;
        if (!interval_meets(l, p[p.size() - 2], p.back(), in)) f(p);
        return Walk::Skip;
    });
}

} // namespace detail

/// All direct paths from x to A in lexicographic order. For x in A this is
/// the single path of length 0.
inline std::vector<DirectPath> direct_paths(const Lattice& l, Vertex x, const ClosedSubset& a) {
    if (x >= l.size()) throw InputError("unknown vertex id " + std::to_string(x));
    if (a.contains(x)) return {DirectPath{{x}}};
    std::vector<DirectPath> out;
    const auto in = mask_of(l.size(), a.vertices());
    detail::for_each_direct_path(l, x, in, [&](std::span<const Vertex> p) {
        out.push_back({{p.begin(), p.end()}});
    });
    return out;
}

/// Least length >= 2 of a direct path from x to A; absent when A u {x} is closed.
inline std::optional<std::size_t> delta(const Lattice& l, Vertex x, const ClosedSubset& a) {
    std::optional<std::size_t> best;
    for (const auto& p : direct_paths(l, x, a))
        if (p.length() >= 2 && (!best || p.length() < *best)) best = p.length();
    return best;
}

/// Greedy construction check: grows {bottom, top} inside S one vertex at a
/// time, each step admitted only when no direct path of length >= 2 leads
/// back into the current set. Reaches S exactly when S is closed.
inline bool is_closed_by_direct_paths(const Lattice& l, const VertexSet& s) {
    if (!s.contains(kBottom) || !s.contains(kTop)) return false;
    VertexSet cur{kBottom, kTop};
    while (cur.size() < s.size()) {
        bool grew = false;
        for (Vertex v : s) {
            if (cur.contains(v)) continue;
            if (!delta(l, v, ClosedSubset::assume_closed(cur))) {
                cur.insert(v);
                grew = true;
                break;
            }
        }
        if (!grew) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Closure

/// Fixed point: keeps adding the interior of some zigzag between members
/// that leaves the set until none is left.
inline ClosedSubset closure_fixed_point(const Lattice& l, const VertexSet& x) {
    VertexSet s = x;
    s.insert(kBottom);
    s.insert(kTop);
    for (;;) {
        auto v = is_closed(l, s);
        if (v) return ClosedSubset::assume_closed(std::move(s));
        s.insert(v.witness.begin(), v.witness.end());
    }
}

/// Grows a closed set one simple extension at a time, recording the order.
///
/// add(x) follows the double induction on (layer gap, delta): if A u {x} is
/// not closed, the second vertex of a shortest direct path from x is added
/// first, which lowers the layer gap of x, and x is retried. A vertex that
/// recurs on the induction stack means the induction does not terminate,
/// which happens only in the presence of zigzag cycles; that raises
/// ContractError.
class ClosedExtender {
public:
    ClosedExtender(const Lattice& l, const ClosedSubset& base)
        : l_(&l), in_(mask_of(l.size(), base.vertices())), on_stack_(l.size(), 0), set_(base.vertices()) {}

    void add(Vertex x) {
        if (x >= l_->size()) throw InputError("unknown vertex id " + std::to_string(x));
        extend(x);
    }

    const VertexSet& current() const { return set_; }
    const std::vector<Vertex>& order() const { return order_; }

private:
    void extend(Vertex x) {
        if (in_[x]) return;
        if (on_stack_[x])
            throw ContractError("closure construction revisits vertex " + std::to_string(x) +
                                "; the ambient is not simply connected");
        on_stack_[x] = 1;
        while (!in_[x]) {
            std::vector<Vertex> best;
            detail::for_each_direct_path(*l_, x, in_, [&](std::span<const Vertex> p) {
                if (p.size() >= 3 && (best.empty() || p.size() < best.size())) best.assign(p.begin(), p.end());
            });
            if (best.empty()) {
                in_[x] = 1;
                set_.insert(x);
                order_.push_back(x);
            } else {
                extend(best[1]);
            }
        }
        on_stack_[x] = 0;
    }

    const Lattice* l_;
    std::vector<char> in_;
    std::vector<char> on_stack_;
    VertexSet set_;
    std::vector<Vertex> order_;
};

struct Closure {
    ClosedSubset set;
    std::vector<Vertex> order;  // construction order over {bottom, top}
};

/// Constructive closure of X: every prefix of `order` (on top of the bounds)
/// is closed.
inline Closure closure(const Lattice& l, const VertexSet& x) {
    ClosedExtender ext(l, ClosedSubset{});
    for (Vertex v : x) ext.add(v);
    return {ClosedSubset::assume_closed(ext.current()), ext.order()};
}

/// cl(A u X) for closed A, with the order of the added vertices.
inline Closure closure_over(const Lattice& l, const ClosedSubset& a, const VertexSet& x) {
    ClosedExtender ext(l, a);
    for (Vertex v : x) ext.add(v);
    return {ClosedSubset::assume_closed(ext.current()), ext.order()};
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

// ---------------------------------------------------------------------------
// Construction orders

enum class LogOrder { Constructive, GreedyAscending, GreedyDescending };

/// A sequence v1..vk with B = A u {v1..vk} and every prefix closed.
inline std::vector<Vertex> construction_order(const Lattice& l, const ClosedSubset& a, const ClosedSubset& b,
                                              LogOrder how) {
    for (Vertex v : a)
        if (!b.contains(v)) throw ContractError("construction_order: A is not contained in B");
    if (how == LogOrder::Constructive) {
        ClosedExtender ext(l, a);
        for (Vertex v : b) ext.add(v);
        if (ext.current() != b.vertices()) throw ContractError("construction_order: B is not closed");
        return ext.order();
    }
    std::vector<Vertex> pool(b.begin(), b.end());
    if (how == LogOrder::GreedyDescending) std::reverse(pool.begin(), pool.end());
    VertexSet cur = a.vertices();
    std::vector<Vertex> order;
    while (cur.size() < b.size()) {
        bool grew = false;
        for (Vertex v : pool) {
            if (cur.contains(v) || delta(l, v, ClosedSubset::assume_closed(cur))) continue;
            cur.insert(v);
            order.push_back(v);
            grew = true;
            break;
        }
        if (!grew) throw ContractError("construction_order: B is not constructible over A");
    }
    return order;
}

/// Types (floor, ceiling, layer) of the successive extensions along `log`.
/// Throws ContractError naming the first prefix that is not closed.
inline std::vector<ExtensionType> extension_types(const Lattice& l, const ClosedSubset& a,
                                                  std::span<const Vertex> log) {
    VertexSet cur = a.vertices();
    std::vector<ExtensionType> types;
    for (std::size_t i = 0; i < log.size(); ++i) {
        const Vertex v = log[i];
        if (v >= l.size()) throw InputError("unknown vertex id " + std::to_string(v));
        if (cur.contains(v))
            throw ContractError("log entry " + std::to_string(i) + " (vertex " + std::to_string(v) +
                                ") is already present");
        const auto prev = ClosedSubset::assume_closed(cur);
        types.push_back({floor_of(l, prev, v), ceil_of(l, prev, v), l.layer(v)});
        cur.insert(v);
        if (auto c = is_closed(l, cur); !c)
            throw ContractError("log prefix " + std::to_string(i + 1) + " is not closed: witness " +
                                to_string(c.witness));
    }
    return types;
}

/// Extension-type endpoints that land in A along a construction of B over A.
inline VertexSet boundary(const Lattice& l, const ClosedSubset& a, const ClosedSubset& b,
                          std::span<const Vertex> log) {
    const auto types = extension_types(l, a, log);
    VertexSet reached = a.vertices();
    reached.insert(log.begin(), log.end());
    if (reached != b.vertices()) throw ContractError("log does not reconstruct B over A");
    VertexSet out;
    for (const auto& t : types) {
        if (a.contains(t.a)) out.insert(t.a);
        if (a.contains(t.b)) out.insert(t.b);
    }
    return out;
}

} // namespace npspace
