#include "montesinos/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace montesinos {

std::vector<Piece> make_pieces(const Rational& t, const SolveOptions& opt) {
    std::vector<Piece> out;
    for (const auto& s : enumerate_skeletons(t, {opt.u_floor, opt.max_edges})) {
        if (s.size() == 1) {
            Piece c;
            c.skel = s;
            c.kind = PathKind::constant;
            c.a = t;
            c.b = Rational(0);
            c.lo = Rational(t.den());
            out.push_back(c);
            continue;
        }
        const Rational& from = s[s.size() - 2];
        const Rational& to = s.back();
        Piece v;
        v.skel = s;
        v.kind = PathKind::vertex;
        v.lo = Rational(to.den());
        v.hi = v.lo;
        v.a = Rational(0);
        v.b = v.lo * to;
        v.full_edges = static_cast<int>(s.size()) - 1;
        if (v.lo >= opt.u_floor) out.push_back(v);
        if (is_vertical_step(from, to)) continue;
        // u*y = alpha*num(from) + beta*num(to), linear in u
        const std::int64_t sd = from.den(), qd = to.den();
        Piece p;
        p.skel = s;
        p.kind = PathKind::partial;
        p.a = Rational(from.num() - to.num(), sd - qd);
        p.b = Rational(-qd * from.num() + sd * to.num(), sd - qd);
        p.lo = Rational(qd);
        p.hi = Rational(sd);
        p.full_edges = static_cast<int>(s.size()) - 2;
        if (*p.hi > opt.u_floor) out.push_back(p);
    }
    return out;
}

namespace {

struct Domain {
    Rational lo{1};
    bool lo_closed = true;
    std::optional<Rational> hi;
    bool hi_closed = true;

    void meet(const Piece& p) {
        bool closed = p.kind != PathKind::partial;
        if (p.lo > lo || (p.lo == lo && !closed)) {
            lo = p.lo;
            lo_closed = closed;
        }
        if (p.hi) {
            if (!hi || *p.hi < *hi || (*p.hi == *hi && !closed)) {
                hi = p.hi;
                hi_closed = closed;
            }
        }
    }
    bool empty() const {
        if (!hi) return false;
        if (*hi < lo) return true;
        if (*hi == lo) return !(lo_closed && hi_closed);
        return false;
    }
    bool contains(const Rational& u) const {
        if (u < lo || (u == lo && !lo_closed)) return false;
        if (hi && (u > *hi || (u == *hi && !hi_closed))) return false;
        return true;
    }
};

Edgepath piece_path(const Piece& p, const Rational& u) {
    if (p.kind == PathKind::constant) return constant_path(p.skel[0], u);
    return truncate_at_u(p.skel, u);
}

CandidateSystem assemble(const std::array<const Piece*, 3>& ps, const Rational& u) {
    CandidateSystem s;
    s.u_bar = u;
    for (int i = 0; i < 3; ++i) {
        s.paths[i] = piece_path(*ps[i], u);
        s.ys[i] = end_y(s.paths[i]);
    }
    return s;
}

Rational representative(const Domain& d) {
    if (!d.hi) return d.lo_closed ? d.lo : d.lo + 1;
    return (d.lo + *d.hi) / 2;
}

struct Key {
    std::vector<std::tuple<int, std::vector<Rational>, Rational>> parts;
    auto operator<=>(const Key&) const = default;
};

Key key_of(const CandidateSystem& s) {
    Key k;
    for (const auto& p : s.paths) k.parts.emplace_back(static_cast<int>(p.kind), p.verts, p.toward);
    return k;
}

} // namespace

std::vector<CandidateSystem> solve_systems(const KnotParams& k, const SolveOptions& opt) {
    if (opt.u_floor < Rational(1)) throw std::invalid_argument("u_floor below 1 is not supported");
    std::array<std::vector<Piece>, 3> pieces;
    for (int i = 0; i < 3; ++i) pieces[i] = make_pieces(k.t[i], opt);

    // third tangle: vertex pieces indexed by (u, u*y)
    std::map<Rational, std::map<Rational, std::vector<const Piece*>>> vertex_index;
    std::vector<const Piece*> free3;
    for (const auto& p : pieces[2]) {
        if (p.kind == PathKind::vertex) vertex_index[p.lo][p.b].push_back(&p);
        else free3.push_back(&p);
    }

    std::map<Key, CandidateSystem> found;
    auto emit = [&](const std::array<const Piece*, 3>& ps, const Domain& d) {
        Rational sa = ps[0]->a + ps[1]->a + ps[2]->a;
        Rational sb = ps[0]->b + ps[1]->b + ps[2]->b;
        CandidateSystem sys;
        if (d.hi && *d.hi == d.lo) {
            if (sa * d.lo + sb != Rational(0)) return;
            sys = assemble(ps, d.lo);
        } else if (!sa.is_zero()) {
            Rational u = -sb / sa;
            if (!d.contains(u)) return;
            sys = assemble(ps, u);
        } else {
            if (!sb.is_zero()) return;
            Rational u = representative(d);
            sys = assemble(ps, u);
            sys.family = true;
            sys.lo = d.lo;
            sys.lo_closed = d.lo_closed;
            sys.hi = d.hi;
        }
        found.emplace(key_of(sys), std::move(sys));
    };

    for (const auto& p1 : pieces[0]) {
        for (const auto& p2 : pieces[1]) {
            int fe = p1.full_edges + p2.full_edges;
            if (opt.max_total_edges >= 0 && fe > opt.max_total_edges) continue;
            Domain d12;
            d12.lo = opt.u_floor;
            d12.meet(p1);
            d12.meet(p2);
            if (d12.empty()) continue;
            Rational a12 = p1.a + p2.a, b12 = p1.b + p2.b;
            for (auto& [u, by_b] : vertex_index) {
                if (!d12.contains(u)) continue;
                auto it = by_b.find(-(a12 * u + b12));
                if (it == by_b.end()) continue;
                for (const Piece* p3 : it->second) {
                    if (opt.max_total_edges >= 0 && fe + p3->full_edges > opt.max_total_edges) continue;
                    Domain d = d12;
                    d.meet(*p3);
                    emit({&p1, &p2, p3}, d);
                }
            }
            for (const Piece* p3 : free3) {
                if (opt.max_total_edges >= 0 && fe + p3->full_edges > opt.max_total_edges) continue;
                Domain d = d12;
                d.meet(*p3);
                if (d.empty()) continue;
                emit({&p1, &p2, p3}, d);
            }
        }
    }

    std::vector<CandidateSystem> out;
    out.reserve(found.size());
    for (auto& [key, sys] : found) out.push_back(std::move(sys));
    std::stable_sort(out.begin(), out.end(),
                     [](const CandidateSystem& a, const CandidateSystem& b) { return a.u_bar < b.u_bar; });
    return out;
}

bool system_in_domain(const CandidateSystem& s, const Rational& u) {
    if (!s.family) return u == s.u_bar;
    if (u < s.lo || (u == s.lo && !s.lo_closed)) return false;
    if (s.hi && u >= *s.hi) return false;
    return true;
}

CandidateSystem retarget(const CandidateSystem& s, const Rational& u) {
    if (!system_in_domain(s, u)) throw std::out_of_range("u outside the solution family");
    CandidateSystem r = s;
    r.u_bar = u;
    for (int i = 0; i < 3; ++i) {
        const Edgepath& p = s.paths[i];
        if (p.kind == PathKind::constant) {
            r.paths[i].u = u;
        } else if (p.kind == PathKind::partial) {
            Skeleton sk = p.verts;
            sk.push_back(p.toward);
            r.paths[i] = truncate_at_u(sk, u);
        }
        r.ys[i] = end_y(r.paths[i]);
    }
    return r;
}

} // namespace montesinos
