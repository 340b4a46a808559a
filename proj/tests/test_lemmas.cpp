// Path lemmas checked by search on small constructible fragments.

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace npspace;
using namespace fixtures;

namespace {

using Path = std::vector<Vertex>;

std::vector<Path> all_zigzags(const Lattice& l) {
    std::vector<Path> out;
    for (Vertex u = 0; u < l.size(); ++u)
        walk_zigzags(l, u, l.size(), [&](std::span<const Vertex> p) {
            out.emplace_back(p.begin(), p.end());
            return Walk::Descend;
        });
    return out;
}

VertexSet contents(const Lattice& l, const Path& p) {
    VertexSet c(p.begin(), p.end());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const auto in = open_interval(l.geometry(), p[i], p[i + 1]);
        c.insert(in.begin(), in.end());
    }
    return c;
}

bool ends_with(const Path& p, std::span<const Vertex> suffix) {
    return p.size() >= suffix.size() && std::equal(suffix.begin(), suffix.end(), p.end() - suffix.size());
}

std::vector<Lattice> samples() {
    std::vector<Lattice> out;
    for (std::uint64_t seed = 0; seed < 8; ++seed) out.push_back(fragment(1 + seed % 3, 9, seed));
    return out;
}

} // namespace

// a0 ... x ... an a zigzag between sinks, a0 <= r, an <= s, x not below r or
// s: x lies on a zigzag between r and s.
TEST(Lemmas, Connect) {
    std::size_t checked = 0;
    for (const auto& l : samples()) {
        const auto zs = all_zigzags(l);
        for (const auto& p : zs) {
            if (p.size() < 3 || !l.less(p[0], p[1]) || !l.less(p.back(), p[p.size() - 2])) continue;
            for (Vertex r = 0; r < l.size(); ++r) {
                if (!l.leq(p.front(), r)) continue;
                for (Vertex s = 0; s < l.size(); ++s) {
                    if (!l.leq(p.back(), s)) continue;
                    for (Vertex x : p) {
                        if (l.leq(x, r) || l.leq(x, s)) continue;
                        bool found = false;
                        for (const auto& q : enumerate_zigzags(l, r, s, l.size()))
                            found = found || std::ranges::find(q.verts, x) != q.verts.end();
                        ASSERT_TRUE(found) << "x=" << x << " r=" << r << " s=" << s;
                        ++checked;
                    }
                }
            }
        }
    }
    EXPECT_GT(checked, 100u);
}

// a ... x ... b and x, y ... c zigzags: y ... c is a final segment of a
// zigzag from a or from b to c.
TEST(Lemmas, Concatenation) {
    std::size_t checked = 0;
    for (const auto& l : samples()) {
        const auto zs = all_zigzags(l);
        for (const auto& p : zs) {
            if (p.size() < 2) continue;
            for (const auto& q : zs) {
                if (q.size() < 2 || std::ranges::find(p, q.front()) == p.end()) continue;
                const std::span<const Vertex> tail(q.begin() + 1, q.end());
                bool found = false;
                for (Vertex from : {p.front(), p.back()})
                    for (const auto& z : enumerate_zigzags(l, from, q.back(), l.size()))
                        found = found || ends_with(z.verts, tail);
                ASSERT_TRUE(found) << "p=" << to_string(p) << " q=" << to_string(q);
                if (++checked > 4000) break;
            }
        }
    }
    EXPECT_GT(checked, 500u);
}

// P a zigzag from a to x and x < c: some zigzag Q from a to c has
// cont(Q) \ cont(P) inside {b : b <= c, not b < x}.
TEST(Lemmas, ContentsExtension) {
    std::size_t checked = 0;
    for (const auto& l : samples()) {
        for (const auto& p : all_zigzags(l)) {
            const Vertex a = p.front(), x = p.back();
            const auto cp = contents(l, p);
            for (Vertex c = 0; c < l.size(); ++c) {
                if (!l.less(x, c)) continue;
                bool found = false;
                for (const auto& q : enumerate_zigzags(l, a, c, l.size())) {
                    bool inside = true;
                    for (Vertex b : contents(l, q.verts))
                        if (!cp.contains(b) && !(l.leq(b, c) && !l.less(b, x))) inside = false;
                    if (inside) {
                        found = true;
                        break;
                    }
                }
                ASSERT_TRUE(found) << "p=" << to_string(p) << " c=" << c;
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 500u);
}
