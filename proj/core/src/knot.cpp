#include "montesinos/knot.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace montesinos {

std::string KnotParams::str() const {
    return "K(" + t[0].str() + "," + t[1].str() + "," + t[2].str() + ")";
}

KnotParams parse_knot(std::string_view text) {
    std::string s(text);
    auto open = s.find('(');
    if (open != std::string::npos) {
        auto close = s.rfind(')');
        if (close == std::string::npos || close < open) throw std::invalid_argument("unbalanced parentheses");
        s = s.substr(open + 1, close - open - 1);
    }
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<Rational> vals;
    std::string tok;
    while (in >> tok) vals.push_back(Rational::parse(tok));
    if (vals.size() != 3) throw std::invalid_argument("expected three tangle slopes");
    for (const auto& v : vals)
        if (v.is_integer()) throw std::invalid_argument("tangle slopes must be non-integral");
    return {{vals[0], vals[1], vals[2]}};
}

namespace {

int idx(int tangle, Corner c) { return 4 * tangle + static_cast<int>(c); }

std::array<std::pair<Corner, Corner>, 2> pairing(SlopeClass c) {
    switch (c) {
    case SlopeClass::zero: return {{{Corner::NW, Corner::NE}, {Corner::SW, Corner::SE}}};
    case SlopeClass::infinity: return {{{Corner::NW, Corner::SW}, {Corner::NE, Corner::SE}}};
    case SlopeClass::one: break;
    }
    return {{{Corner::NW, Corner::SE}, {Corner::NE, Corner::SW}}};
}

} // namespace

EndpointData trace_endpoints(const KnotParams& k) {
    std::array<int, 12> inner{}, outer{};
    for (int i = 0; i < 3; ++i) {
        for (auto [a, b] : pairing(slope_class(k.t[i]))) {
            inner[idx(i, a)] = idx(i, b);
            inner[idx(i, b)] = idx(i, a);
        }
        int j = (i + 1) % 3;
        outer[idx(i, Corner::NE)] = idx(j, Corner::NW);
        outer[idx(j, Corner::NW)] = idx(i, Corner::NE);
        outer[idx(i, Corner::SE)] = idx(j, Corner::SW);
        outer[idx(j, Corner::SW)] = idx(i, Corner::SE);
    }
    EndpointData d;
    std::array<bool, 12> seen{};
    for (int start = 0; start < 12; ++start) {
        if (seen[start]) continue;
        ++d.components;
        int cur = start;
        do {
            seen[cur] = true;
            d.inward[cur] = true;
            int exit = inner[cur];
            seen[exit] = true;
            d.inward[exit] = false;
            cur = outer[exit];
        } while (cur != start);
    }
    return d;
}

int component_count(const KnotParams& k) {
    return trace_endpoints(k).components;
}

int component_count_by_parity(const KnotParams& k) {
    int even_den = 0, odd_num = 0;
    for (const auto& t : k.t) {
        auto c = slope_class(t);
        if (c == SlopeClass::infinity) ++even_den;
        if (c == SlopeClass::one) ++odd_num;
    }
    if (even_den >= 2) return even_den;
    if (even_den == 1) return 1;
    return odd_num % 2 == 1 ? 1 : 2;
}

SlopeClass same_orientation_class(const EndpointData& d, int tangle) {
    for (auto c : {SlopeClass::zero, SlopeClass::one, SlopeClass::infinity}) {
        auto [a, b] = pairing(c)[0];
        if (d.inward[idx(tangle, a)] == d.inward[idx(tangle, b)]) return c;
    }
    throw std::logic_error("no equal-orientation pairing");
}

bool parallel_winding(const EndpointData& d) {
    return d.inward[idx(0, Corner::NW)] == d.inward[idx(0, Corner::SW)];
}

std::vector<KnotParams> equivalence_moves(const KnotParams& k, int shift_window) {
    std::set<KnotParams> out;
    std::array<int, 3> perm{0, 1, 2};
    for (const KnotParams& base : {k, k.mirror()}) {
        std::sort(perm.begin(), perm.end());
        do {
            KnotParams p{{base.t[perm[0]], base.t[perm[1]], base.t[perm[2]]}};
            for (int a = -shift_window; a <= shift_window; ++a)
                for (int b = -shift_window; b <= shift_window; ++b) {
                    int c = -a - b;
                    if (c < -shift_window || c > shift_window) continue;
                    out.insert({{p.t[0] + a, p.t[1] + b, p.t[2] + c}});
                }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {out.begin(), out.end()};
}

namespace {

struct Reduced {
    std::array<Rational, 3> frac;
    std::int64_t e = 0;
    auto operator<=>(const Reduced&) const = default;
};

Reduced reduce(const KnotParams& k) {
    Reduced r;
    for (int i = 0; i < 3; ++i) {
        r.e += k.t[i].floor();
        r.frac[i] = k.t[i].frac();
    }
    std::sort(r.frac.begin(), r.frac.end());
    return r;
}

} // namespace

CanonicalKnot canonicalize(const KnotParams& k) {
    Reduced a = reduce(k), b = reduce(k.mirror());
    CanonicalKnot c;
    c.mirrored = b < a;
    const Reduced& r = c.mirrored ? b : a;
    c.rep = {{r.frac[0] + r.e, r.frac[1], r.frac[2]}};
    return c;
}

} // namespace montesinos
