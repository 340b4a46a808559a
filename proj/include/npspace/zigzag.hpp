#pragma once

// Alternating sequences, zigzags and weak zigzags: classification,
// refinement, prepending, bounded enumeration and zigzag-cycle search.

#include "npspace/error.hpp"
#include "npspace/geometry.hpp"
#include "npspace/lattice.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace npspace {

/// Orientation of the first step of a sequence: Up means x0 <= x1.
enum class Direction { Up, Down };

inline Direction opposite(Direction d) { return d == Direction::Up ? Direction::Down : Direction::Up; }

struct AltSeq {
    std::vector<Vertex> verts;
    Direction start = Direction::Up;

    std::size_t length() const { return verts.empty() ? 0 : verts.size() - 1; }

    /// Direction of the step verts[i] -> verts[i+1].
    Direction step(std::size_t i) const { return i % 2 == 0 ? start : opposite(start); }

    /// Infers the start direction from the first two vertices.
    static AltSeq from(const Geometry& g, std::vector<Vertex> verts) {
        Direction d = Direction::Up;
        if (verts.size() >= 2 && !g.leq(verts[0], verts[1]) && g.leq(verts[1], verts[0]))
            d = Direction::Down;
        return {std::move(verts), d};
    }

    friend bool operator==(const AltSeq&, const AltSeq&) = default;
};

/// Ordered from weakest to strongest; classify() returns the strongest class.
enum class SeqClass { NotAlternating, Alternating, WeakZigzag, Zigzag };

inline const char* to_string(SeqClass c) {
    switch (c) {
    case SeqClass::NotAlternating: return "not-alternating";
    case SeqClass::Alternating: return "alternating";
    case SeqClass::WeakZigzag: return "weak-zigzag";
    case SeqClass::Zigzag: return "zigzag";
    }
    return "unknown";
}

inline bool is_alternating(const Geometry& g, const AltSeq& s) {
    if (s.verts.empty()) throw InputError("empty sequence");
    for (std::size_t i = 0; i + 1 < s.verts.size(); ++i) {
        const Vertex x = s.verts[i], y = s.verts[i + 1];
        if (!(s.step(i) == Direction::Up ? g.leq(x, y) : g.leq(y, x))) return false;
    }
    return !(s.length() == 1 && s.verts[0] == s.verts[1]);
}

/// Vertices at distance 2 and 3 are incomparable; needs length >= 2.
inline bool is_weak_zigzag(const Geometry& g, const AltSeq& s) {
    if (!is_alternating(g, s) || s.length() < 2) return false;
    const auto& x = s.verts;
    for (std::size_t i = 0; i + 2 < x.size(); ++i) {
        if (g.comparable(x[i], x[i + 2])) return false;
        if (i + 3 < x.size() && g.comparable(x[i], x[i + 3])) return false;
    }
    return true;
}

/// Every interior sink is the meet and every interior peak the join of its
/// neighbours, and consecutive vertices differ.
inline bool is_zigzag(const Geometry& g, const AltSeq& s) {
    if (!is_alternating(g, s)) return false;
    const auto& x = s.verts;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] == x[i + 1]) return false;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const bool peak = s.step(i - 1) == Direction::Up;
        auto bound = peak ? join(g, x[i - 1], x[i + 1]) : meet(g, x[i - 1], x[i + 1]);
        if (!bound || *bound != x[i]) return false;
    }
    return true;
}

inline SeqClass classify(const Geometry& g, const AltSeq& s) {
    if (s.verts.empty()) throw InputError("classify: empty sequence");
    for (Vertex v : s.verts)
        if (!g.contains(v)) throw InputError("classify: unknown vertex id " + std::to_string(v));
    if (!is_alternating(g, s)) return SeqClass::NotAlternating;
    if (is_zigzag(g, s)) return SeqClass::Zigzag;
    if (is_weak_zigzag(g, s)) return SeqClass::WeakZigzag;
    return SeqClass::Alternating;
}

/// Refines a weak zigzag to a zigzag: interior sinks are raised to the meet
/// of their neighbouring peaks, then interior peaks are lowered to the join
/// of the new neighbouring sinks. Endpoints and length are unchanged.
inline AltSeq refine(const Lattice& l, const AltSeq& s) {
    const SeqClass c = classify(l.geometry(), s);
    if (c == SeqClass::Zigzag) return s;
    if (c != SeqClass::WeakZigzag)
        throw ContractError(std::string("refine: input is ") + to_string(c) + ", not a weak zigzag");
    AltSeq out = s;
    auto& x = out.verts;
    auto is_peak = [&](std::size_t i) { return s.step(i - 1) == Direction::Up; };
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        if (!is_peak(i)) x[i] = l.meet(s.verts[i - 1], s.verts[i + 1]);
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        if (is_peak(i)) x[i] = l.join(x[i - 1], x[i + 1]);
    if (classify(l.geometry(), out) != SeqClass::Zigzag)
        throw ContractError("refine: refinement is not a zigzag; ambient is not a lattice?");
    return out;
}

/// Puts c in front of the zigzag z = x0, x1, ... where c lies on the same
/// side of x0 as x1 but does not reach past x1. With z = a0, b0, ...:
/// c < b0 yields the zigzag c, b0, ...; c incomparable to b0 yields the
/// weak zigzag c, a0, b0, .... The order dual is handled symmetrically.
inline AltSeq prepend(const Geometry& g, Vertex c, const AltSeq& z) {
    if (!g.contains(c)) throw InputError("prepend: unknown vertex id " + std::to_string(c));
    if (classify(g, z) != SeqClass::Zigzag) throw ContractError("prepend: z is not a zigzag");
    if (z.length() < 1) throw ContractError("prepend: z must have length >= 1");
    const Vertex x0 = z.verts[0], x1 = z.verts[1];
    const bool up = z.start == Direction::Up;
    auto below = [&](Vertex p, Vertex q) { return up ? g.leq(p, q) : g.leq(q, p); };
    if (!below(x0, c))
        throw ContractError(up ? "prepend: requires c >= a0" : "prepend: requires c <= b0");
    if (below(x1, c))
        throw ContractError(up ? "prepend: requires c not >= b0" : "prepend: requires c not <= a0");
    if (c == x0) return z;
    AltSeq out;
    if (below(c, x1)) {
        out.start = z.start;
        out.verts.push_back(c);
        out.verts.insert(out.verts.end(), z.verts.begin() + 1, z.verts.end());
    } else {
        out.start = opposite(z.start);
        out.verts.push_back(c);
        out.verts.insert(out.verts.end(), z.verts.begin(), z.verts.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bounded depth-first enumeration

enum class Walk { Descend, Skip, Stop };

/// Depth-first walk over the vertex-distinct zigzags that start at `start`
/// and have length at most `max_len`. Children are tried in ascending id
/// order, so prefixes are visited in lexicographic order. The visitor sees
/// each path once and decides whether to extend it. Returns false if the
/// visitor stopped the walk.
template <class Visit>
bool walk_zigzags(const Lattice& l, Vertex start, std::size_t max_len, Visit&& visit) {
    if (start >= l.size()) throw InputError("unknown vertex id " + std::to_string(start));
    std::vector<Vertex> path{start};
    std::vector<char> used(l.size(), 0);
    used[start] = 1;

    auto rec = [&](auto& self) -> bool {
        const Walk w = visit(std::span<const Vertex>(path));
        if (w == Walk::Stop) return false;
        if (w == Walk::Skip || path.size() > max_len) return true;
        const Vertex last = path.back();
        auto step = [&](Vertex y) -> bool {
            used[y] = 1;
            path.push_back(y);
            const bool go_on = self(self);
            path.pop_back();
            used[y] = 0;
            return go_on;
        };
        if (path.size() == 1) {
            const auto& lo = l.below(last);
            const auto& hi = l.above(last);
            std::size_t i = 0, j = 0;
            while (i < lo.size() || j < hi.size()) {
                const Vertex y = (j == hi.size() || (i < lo.size() && lo[i] < hi[j])) ? lo[i++] : hi[j++];
                if (!step(y)) return false;
            }
            return true;
        }
        const Vertex prev = path[path.size() - 2];
        if (l.less(prev, last)) {
            for (Vertex y : l.below(last))
                if (!used[y] && l.join(prev, y) == last && !step(y)) return false;
        } else {
            for (Vertex y : l.above(last))
                if (!used[y] && l.meet(prev, y) == last && !step(y)) return false;
        }
        return true;
    };
    return rec(rec);
}

inline AltSeq as_seq(const Lattice& l, std::span<const Vertex> path) {
    return AltSeq::from(l.geometry(), {path.begin(), path.end()});
}

/// All vertex-distinct zigzags from x to y of length <= max_len, in
/// lexicographic order of their vertex lists.
inline std::vector<AltSeq> enumerate_zigzags(const Lattice& l, Vertex x, Vertex y, std::size_t max_len) {
    if (y >= l.size()) throw InputError("unknown vertex id " + std::to_string(y));
    std::vector<AltSeq> out;
    walk_zigzags(l, x, max_len, [&](std::span<const Vertex> p) {
        if (p.back() != y) return Walk::Descend;
        out.push_back(as_seq(l, p));
        return Walk::Skip;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Zigzag cycles

/// A closed zigzag a0, b0, a1, b1, ..., a(n-1), b(n-1) read cyclically:
/// every sink is the meet of its two peaks and every peak the join of its
/// two sinks, indices modulo 2n.
struct ZigzagCycle {
    std::vector<Vertex> verts;

    std::vector<Vertex> peaks() const {
        std::vector<Vertex> out;
        for (std::size_t i = 1; i < verts.size(); i += 2) out.push_back(verts[i]);
        return out;
    }
    friend bool operator==(const ZigzagCycle&, const ZigzagCycle&) = default;
};

/// Searches for a zigzag cycle with pairwise distinct peaks, at most
/// `max_peaks` of them. Sinks are forced as meets of consecutive peaks, so
/// the search runs over peak sequences only; the first peak is the one with
/// the least id, fixing the rotation.
inline std::optional<ZigzagCycle> find_zigzag_cycle(const Lattice& l, std::size_t max_peaks) {
    const Vertex n = static_cast<Vertex>(l.size());
    std::vector<Vertex> peaks, sinks;  // sinks[i] = meet(peaks[i], peaks[i+1])
    std::vector<char> used(n, 0);
    std::optional<ZigzagCycle> found;

    auto rec = [&](auto& self) -> bool {
        const std::size_t k = peaks.size();
        const Vertex first = peaks.front(), last = peaks.back();
        if (k >= 3) {
            const Vertex a0 = l.meet(last, first);
            if (a0 != last && a0 != first && l.join(sinks.back(), a0) == last &&
                l.join(a0, sinks.front()) == first) {
                ZigzagCycle c;
                c.verts.push_back(a0);
                for (std::size_t i = 0; i < k; ++i) {
                    c.verts.push_back(peaks[i]);
                    if (i + 1 < k) c.verts.push_back(sinks[i]);
                }
                found = std::move(c);
                return true;
            }
        }
        if (k >= max_peaks) return false;
        for (Vertex b = first + 1; b < n; ++b) {
            if (used[b]) continue;
            const Vertex a = l.meet(last, b);
            if (a == last || a == b) continue;
            if (k >= 2 && l.join(sinks.back(), a) != last) continue;
            used[b] = 1;
            peaks.push_back(b);
            sinks.push_back(a);
            const bool hit = self(self);
            sinks.pop_back();
            peaks.pop_back();
            used[b] = 0;
            if (hit) return true;
        }
        return false;
    };

    if (max_peaks < 3) return std::nullopt;
    for (Vertex b0 = 0; b0 < n; ++b0) {
        used[b0] = 1;
        peaks.assign(1, b0);
        sinks.clear();
        const bool hit = rec(rec);
        used[b0] = 0;
        if (hit) return found;
    }
    return std::nullopt;
}

/// Exhaustive under the distinct-peak restriction.
inline std::optional<ZigzagCycle> find_zigzag_cycle(const Lattice& l) {
    return find_zigzag_cycle(l, l.size());
}

inline bool is_simply_connected(const Lattice& l) { return !find_zigzag_cycle(l).has_value(); }

} // namespace npspace
