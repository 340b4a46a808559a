#pragma once

// Isomorphisms between closed subsets and the back-and-forth engine.

#include "npspace/closure.hpp"
#include "npspace/error.hpp"
#include "npspace/extension.hpp"
#include "npspace/lattice.hpp"
#include "npspace/verdict.hpp"
#include "npspace/zigzag.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace npspace {

/// A finite bijection from a closed subset of one lattice onto a closed
/// subset of another.
struct PartialIso {
    std::map<Vertex, Vertex> map{{kBottom, kBottom}, {kTop, kTop}};

    VertexSet domain() const {
        VertexSet s;
        for (auto [x, y] : map) s.insert(x);
        return s;
    }
    VertexSet codomain() const {
        VertexSet s;
        for (auto [x, y] : map) s.insert(y);
        return s;
    }
    PartialIso inverse() const {
        PartialIso p;
        p.map.clear();
        for (auto [x, y] : map) p.map.emplace(y, x);
        return p;
    }
    Vertex operator()(Vertex x) const { return map.at(x); }
    friend bool operator==(const PartialIso&, const PartialIso&) = default;
};

/// Bijective, layer- and order-preserving both ways, with closed domain and
/// codomain. The witness names the offending vertices.
inline Verdict check_iso(const Lattice& src, const Lattice& dst, const PartialIso& p) {
    VertexSet seen;
    for (auto [x, y] : p.map) {
        if (x >= src.size() || y >= dst.size()) return Verdict::no({x, y}, "unknown vertex");
        if (!seen.insert(y).second) return Verdict::no({x, y}, "not injective");
        if (src.layer(x) != dst.layer(y)) return Verdict::no({x, y}, "layer");
    }
    for (auto [x1, y1] : p.map)
        for (auto [x2, y2] : p.map)
            if (src.less(x1, x2) != dst.less(y1, y2)) return Verdict::no({x1, x2}, "order");
    if (auto v = is_closed(src, p.domain()); !v) return Verdict::no(std::move(v.witness), "domain not closed");
    if (auto v = is_closed(dst, p.codomain()); !v) return Verdict::no(std::move(v.witness), "codomain not closed");
    return Verdict::yes();
}

struct IsoExtension {
    PartialIso iso;
    Lattice target;
    std::vector<Vertex> grown;  // target vertices created by growth
};

/// Extends p to cl(domain u {v}). The closure is built one simple extension
/// at a time; each step of type (a, b, s) is matched by the least-id target
/// vertex outside the codomain with layer s, floor f(a), ceiling f(b) and no
/// direct path of length >= 2 back into the codomain. Without a match the
/// target grows by a simple extension of type (f(a), f(b), s) when `grow`
/// is set; otherwise the result is absent.
inline std::optional<IsoExtension> extend_iso(const Lattice& src, const Lattice& dst, const PartialIso& p, Vertex v,
                                              bool grow) {
    if (v >= src.size()) throw InputError("extend_iso: unknown vertex id " + std::to_string(v));
    IsoExtension out{p, dst, {}};
    if (p.map.contains(v)) return out;

    const auto order = closure_over(src, ClosedSubset::assume_closed(p.domain()), {v}).order;
    VertexSet dom = p.domain(), cod = p.codomain();
    for (Vertex u : order) {
        const auto a_side = ClosedSubset::assume_closed(dom);
        const auto b_side = ClosedSubset::assume_closed(cod);
        const ExtensionType t{out.iso(floor_of(src, a_side, u)), out.iso(ceil_of(src, a_side, u)), src.layer(u)};
        const Lattice& tl = out.target;
        std::optional<Vertex> match;
        for (Vertex w = 0; w < tl.size() && !match; ++w) {
            if (cod.contains(w) || tl.layer(w) != t.s) continue;
            if (floor_of(tl, b_side, w) != t.a || ceil_of(tl, b_side, w) != t.b) continue;
            if (!delta(tl, w, b_side)) match = w;
        }
        if (!match) {
            if (!grow) return std::nullopt;
            auto [next, w] = simple_extension(out.target, t);
            out.target = std::move(next);
            out.grown.push_back(w);
            match = w;
        }
        out.iso.map.emplace(u, *match);
        dom.insert(u);
        cod.insert(*match);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Back and forth

enum class Side { Forth, Back };

struct GameMove {
    Side side = Side::Forth;
    Vertex picked = 0;   // vertex on the moving side
    bool ok = true;
    std::vector<std::pair<Vertex, Vertex>> added;  // pairs (left id, right id)
    std::size_t grown = 0;
};

struct GameTrace {
    bool success = true;
    std::vector<GameMove> moves;
    std::string failure;                 // empty on success
    std::optional<ZigzagCycle> cycle;    // when either side has one
    PartialIso iso;
    Lattice left, right;
};

/// Plays `depth` rounds starting from {bottom->bottom, top->top}. A round is
/// a forth move (least unmapped id on the left) followed by a back move
/// (least unmapped id on the right). A side with nothing left to map passes.
/// The first failed extension ends the game.
inline GameTrace backforth_game(const Lattice& g, const Lattice& h, std::size_t depth, bool grow) {
    if (g.n() != h.n())
        throw ContractError("backforth_game: N differs (" + std::to_string(g.n()) + " vs " +
                            std::to_string(h.n()) + ")");
    GameTrace tr{true, {}, {}, std::nullopt, PartialIso{}, g, h};

    auto fail = [&](GameMove m, std::string why) {
        m.ok = false;
        tr.moves.push_back(std::move(m));
        tr.success = false;
        tr.failure = std::move(why);
        tr.cycle = find_zigzag_cycle(tr.left);
        if (!tr.cycle) tr.cycle = find_zigzag_cycle(tr.right);
    };
    auto least_unmapped = [](const Lattice& l, const VertexSet& mapped) -> std::optional<Vertex> {
        for (Vertex v = 0; v < l.size(); ++v)
            if (!mapped.contains(v)) return v;
        return std::nullopt;
    };

    for (std::size_t round = 0; round < depth; ++round) {
        for (Side side : {Side::Forth, Side::Back}) {
            const bool forth = side == Side::Forth;
            const Lattice& from = forth ? tr.left : tr.right;
            const Lattice& to = forth ? tr.right : tr.left;
            const PartialIso p = forth ? tr.iso : tr.iso.inverse();
            const auto pick = least_unmapped(from, p.domain());
            if (!pick) continue;
            GameMove m{side, *pick, true, {}, 0};
            std::optional<IsoExtension> ext;
            try {
                ext = extend_iso(from, to, p, *pick, grow);
            } catch (const ContractError& e) {
                fail(std::move(m), e.what());
                return tr;
            }
            if (!ext) {
                fail(std::move(m), "no closed match for vertex " + std::to_string(*pick));
                return tr;
            }
            for (auto [x, y] : ext->iso.map)
                if (!p.map.contains(x)) m.added.emplace_back(forth ? x : y, forth ? y : x);
            m.grown = ext->grown.size();
            tr.iso = forth ? ext->iso : ext->iso.inverse();
            (forth ? tr.right : tr.left) = std::move(ext->target);
            tr.moves.push_back(std::move(m));
        }
    }
    return tr;
}

} // namespace npspace
