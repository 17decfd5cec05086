#pragma once

// Brute-force references used by the oracle tests and the acceptance run.

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "montesinos/toroidal.hpp"

namespace oracle {

using namespace montesinos;

inline bool adjacent(const Rational& a, const Rational& b) {
    __extension__ typedef __int128 wide;
    wide d = static_cast<wide>(a.num()) * b.den() - static_cast<wide>(b.num()) * a.den();
    return d == 1 || d == -1;
}

// Every minimal leftward path from <t> found by walking the Farey graph
// restricted to a box around t, testing adjacency by determinant.
inline std::set<Skeleton> skeletons(const Rational& t, int max_edges) {
    std::vector<Rational> box;
    const std::int64_t lo = t.floor() - max_edges - 1, hi = t.ceil() + max_edges + 1;
    for (std::int64_t q = 1; q <= t.den(); ++q)
        for (std::int64_t p = lo * q; p <= hi * q; ++p)
            if (std::gcd(p, q) == 1) box.emplace_back(p, q);
    std::map<Rational, std::vector<Rational>> nbrs;
    for (const auto& a : box)
        for (const auto& b : box)
            if (adjacent(a, b)) nbrs[a].push_back(b);

    std::set<Skeleton> out;
    std::vector<Skeleton> stack{{t}};
    while (!stack.empty()) {
        Skeleton s = stack.back();
        stack.pop_back();
        out.insert(s);
        if (static_cast<int>(s.size()) > max_edges) continue;
        const Rational& v = s.back();
        for (const auto& w : nbrs[v]) {
            bool leftward = w.den() < v.den() || (w.den() == 1 && v.den() == 1);
            if (!leftward) continue;
            if (s.size() >= 2) {
                const Rational& prev = s[s.size() - 2];
                if (w == prev || adjacent(w, prev)) continue;
            }
            Skeleton next = s;
            next.push_back(w);
            stack.push_back(std::move(next));
        }
    }
    return out;
}

// Components of the closed curve, by union-find over the twelve endpoints.
inline int components(const KnotParams& k) {
    std::array<int, 12> parent;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    enum { NW, NE, SW, SE };
    for (int i = 0; i < 3; ++i) {
        const bool p_odd = k.t[i].num() % 2 != 0, q_odd = k.t[i].den() % 2 != 0;
        int b = 4 * i;
        if (!p_odd) {   // 0/1: horizontal arcs
            unite(b + NW, b + NE);
            unite(b + SW, b + SE);
        } else if (!q_odd) {   // 1/0: vertical arcs
            unite(b + NW, b + SW);
            unite(b + NE, b + SE);
        } else {   // 1/1: crossing arcs
            unite(b + NW, b + SE);
            unite(b + NE, b + SW);
        }
        int c = 4 * ((i + 1) % 3);
        unite(b + NE, c + NW);
        unite(b + SE, c + SW);
    }
    std::set<int> roots;
    for (int x = 0; x < 12; ++x) roots.insert(find(x));
    return static_cast<int>(roots.size());
}

// e of a path ending on an edge from the larger denominator s toward q,
// straight from the definitions.
inline Rational edge_euler(std::int64_t q, std::int64_t s, const Rational& u) {
    return (Rational(4) - u) / Rational(3) - (Rational(s) - u) / Rational(s - q);
}

inline Rational horizontal_euler(std::int64_t q, const Rational& u) {
    return Rational(1, 3) + u * (Rational(1, q) - Rational(1, 3));
}

inline Sign sign_of(const Rational& r) {
    return r.sign() > 0 ? Sign::positive : r.sign() < 0 ? Sign::negative : Sign::zero;
}

} // namespace oracle
