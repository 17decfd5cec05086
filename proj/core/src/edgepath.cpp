#include "montesinos/edgepath.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace montesinos {

Edgepath constant_path(const Rational& t, const Rational& u) {
    Edgepath p;
    p.kind = PathKind::constant;
    p.verts = {t};
    p.u = u;
    return p;
}

bool is_vertical_step(const Rational& a, const Rational& b) {
    return a.den() == 1 && b.den() == 1;
}

bool is_minimal(const Skeleton& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!is_farey_pair(s[i - 1], s[i])) return false;
        const bool vertical = is_vertical_step(s[i - 1], s[i]);
        if (!vertical && s[i].den() >= s[i - 1].den()) return false;
        if (i >= 2) {
            if (s[i] == s[i - 2]) return false;
            // s[i-2], s[i-1], s[i] bound a triangle
            if (is_farey_pair(s[i - 2], s[i])) return false;
        }
    }
    return true;
}

bool validate_allowable(const Edgepath& p) {
    if (p.verts.empty() || p.start().is_integer()) return false;
    if (!is_minimal(p.verts)) return false;
    const auto& last = p.verts.back();
    switch (p.kind) {
    case PathKind::constant:
        return p.verts.size() == 1 && p.u >= Rational(last.den());
    case PathKind::vertex:
        return p.verts.size() >= 2 && p.u == Rational(last.den());
    case PathKind::partial: {
        Skeleton ext = p.verts;
        ext.push_back(p.toward);
        if (!is_minimal(ext) || is_vertical_step(last, p.toward)) return false;
        return p.u > Rational(p.toward.den()) && p.u < Rational(last.den());
    }
    }
    return false;
}

Rational partial_beta(const Edgepath& p) {
    if (p.kind != PathKind::partial) return Rational(0);
    const Rational s(p.verts.back().den()), q(p.toward.den());
    return (s - p.u) / (s - q);
}

Rational path_length(const Edgepath& p) {
    if (p.kind == PathKind::constant) return Rational(0);
    return Rational(p.full_edges()) + partial_beta(p);
}

DiagramPoint end_point(const Edgepath& p) {
    switch (p.kind) {
    case PathKind::constant:
        return point_on_horizontal(p.start(), p.u);
    case PathKind::vertex: {
        DiagramPoint pt;
        pt.locus = DiagramPoint::Locus::vertex;
        pt.vertex = p.verts.back();
        pt.y = pt.vertex;
        pt.u = p.u;
        pt.edge = Edge::between(p.verts[p.verts.size() - 2], p.verts.back());
        return pt;
    }
    case PathKind::partial:
        return interpolate_on_edge(Edge::between(p.verts.back(), p.toward), p.u);
    }
    return {};
}

Edge final_segment(const Edgepath& p) {
    if (p.kind == PathKind::constant) return Edge::horizontal(p.start());
    if (p.kind == PathKind::partial) return Edge::between(p.verts.back(), p.toward);
    return Edge::between(p.verts[p.verts.size() - 2], p.verts.back());
}

namespace {

// y-value at x = 1 of the line through the edge; u*y = A*u + B, so A.
Rational border_intercept(const Edge& e) {
    if (e.kind != Edge::Kind::nonhorizontal || e.is_vertical())
        throw std::domain_error("r-value undefined for vertical or horizontal final segment");
    return Rational(e.hi.num() - e.lo.num(), e.hi.den() - e.lo.den());
}

} // namespace

std::int64_t r_value(const Edgepath& p) {
    if (p.kind == PathKind::constant) throw std::domain_error("r-value undefined for constant path");
    return border_intercept(final_segment(p)).den();
}

Rational final_segment_slope(const Edgepath& p) {
    const Edge e = final_segment(p);
    if (e.kind != Edge::Kind::nonhorizontal || e.is_vertical())
        throw std::domain_error("slope undefined for vertical or horizontal final segment");
    auto [x0, y0] = vertex_coords({DiagramVertex::Kind::finite, e.lo});
    auto [x1, y1] = vertex_coords({DiagramVertex::Kind::finite, e.hi});
    return (y1 - y0) / (x1 - x0);
}

std::int64_t m_value(const Edgepath& p, const Rational& u_bar) {
    if (p.kind == PathKind::constant) return (u_bar / Rational(p.start().den())).den();
    return path_length(p).den();
}

std::vector<Skeleton> enumerate_skeletons(const Rational& t, const SkeletonOptions& opt) {
    if (t.is_integer()) throw std::invalid_argument("tangle slope must be non-integral");
    std::vector<Skeleton> out;
    Skeleton cur{t};
    std::function<void(Skeleton&)> dfs = [&](Skeleton& s) {
        out.push_back(s);
        if (static_cast<int>(s.size()) - 1 >= opt.max_edges) return;
        const Rational& v = s.back();
        // stepping off a vertex at or left of the floor can only reach u < floor
        if (v.den() > 1 && Rational(v.den()) <= opt.u_floor) return;
        if (v.den() == 1 && opt.u_floor > Rational(1)) return;
        std::vector<Rational> next;
        if (v.den() > 1) {
            auto par = farey_parents(v);
            next = {par[0], par[1]};
        } else {
            next = {v - Rational(1), v + Rational(1)};
        }
        for (const auto& w : next) {
            s.push_back(w);
            if (is_minimal(s)) dfs(s);
            s.pop_back();
        }
    };
    dfs(cur);
    std::sort(out.begin(), out.end());
    return out;
}

Edgepath truncate_at_u(const Skeleton& s, const Rational& u) {
    if (s.empty()) throw std::invalid_argument("empty skeleton");
    Edgepath p;
    if (s.size() == 1) {
        if (u < Rational(s[0].den())) throw std::out_of_range("u left of the tangle vertex");
        return constant_path(s[0], u);
    }
    const Rational& a = s[s.size() - 2];
    const Rational& b = s.back();
    if (is_vertical_step(a, b)) {
        if (u != Rational(1)) throw std::out_of_range("vertical edge lives at u = 1");
        p.kind = PathKind::vertex;
        p.verts = s;
        p.u = u;
        return p;
    }
    const Rational lo(b.den()), hi(a.den());
    if (u < lo || u > hi) throw std::out_of_range("u outside final edge");
    if (u == lo) {
        p.kind = PathKind::vertex;
        p.verts = s;
    } else if (u == hi) {
        p.verts.assign(s.begin(), s.end() - 1);
        p.kind = p.verts.size() == 1 ? PathKind::constant : PathKind::vertex;
    } else {
        p.kind = PathKind::partial;
        p.verts.assign(s.begin(), s.end() - 1);
        p.toward = b;
    }
    p.u = u;
    return p;
}

std::string format_path(const Edgepath& p) {
    if (p.kind == PathKind::constant) return "const(" + p.start().str() + " @ " + p.u.str() + ")";
    std::string out;
    for (std::size_t i = 0; i < p.verts.size(); ++i) {
        if (i) out += " > ";
        out += p.verts[i].str();
    }
    if (p.kind == PathKind::partial) out += " > " + p.toward.str() + " > @" + p.u.str();
    return out;
}

} // namespace montesinos
