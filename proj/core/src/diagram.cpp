#include "montesinos/diagram.hpp"

#include <cstdlib>
#include <stdexcept>

namespace montesinos {

namespace {
__extension__ typedef __int128 wide;
}

SlopeClass slope_class(const Rational& r) {
    if (r.den() % 2 == 0) return SlopeClass::infinity;
    return (r.num() % 2 == 0) ? SlopeClass::zero : SlopeClass::one;
}

const char* to_string(SlopeClass c) {
    switch (c) {
    case SlopeClass::zero: return "0";
    case SlopeClass::one: return "1";
    case SlopeClass::infinity: return "inf";
    }
    return "?";
}

bool is_farey_pair_ext(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    wide d = static_cast<wide>(p) * s - static_cast<wide>(r) * q;
    return d == 1 || d == -1;
}

bool is_farey_pair(const Rational& a, const Rational& b) {
    return is_farey_pair_ext(a.num(), a.den(), b.num(), b.den());
}

std::array<Rational, 2> farey_parents(const Rational& r) {
    const std::int64_t p = r.num(), q = r.den();
    if (q < 2) throw std::invalid_argument("integer has no Farey parents");
    // s = p^{-1} mod q gives p*s = 1 + r*q, so r/s is a neighbor with s < q
    std::int64_t a = ((p % q) + q) % q, m = q;
    std::int64_t x0 = 0, x1 = 1;
    while (a != 0) {
        std::int64_t t = m / a;
        std::int64_t tmp = m - t * a;
        m = a;
        a = tmp;
        tmp = x0 - t * x1;
        x0 = x1;
        x1 = tmp;
    }
    std::int64_t s = ((x0 % q) + q) % q;
    std::int64_t rr = static_cast<std::int64_t>((static_cast<wide>(p) * s - 1) / q);
    Rational left(rr, s);
    Rational right(p - rr, q - s);
    if (right < left) std::swap(left, right);
    return {left, right};
}

std::pair<Rational, Rational> vertex_coords(const DiagramVertex& v) {
    switch (v.kind) {
    case DiagramVertex::Kind::finite:
        return {Rational(v.slope.den() - 1, v.slope.den()), Rational(v.slope.num(), v.slope.den())};
    case DiagramVertex::Kind::ideal:
        return {Rational(1), v.slope};
    case DiagramVertex::Kind::infinity:
        return {Rational(-1), Rational(0)};
    }
    return {};
}

Edge Edge::between(const Rational& a, const Rational& b) {
    if (!is_farey_pair(a, b)) throw std::invalid_argument("not a Farey pair: " + a.str() + ", " + b.str());
    Edge e;
    bool swap = a.den() > b.den() || (a.den() == b.den() && a > b);
    e.lo = swap ? b : a;
    e.hi = swap ? a : b;
    return e;
}

Edge Edge::horizontal(const Rational& y) {
    Edge e;
    e.kind = Kind::horizontal;
    e.lo = y;
    e.hi = y;
    return e;
}

Rational u_of_x(const Rational& x) {
    return Rational(1) / (Rational(1) - x);
}

Rational x_of_u(const Rational& u) {
    return (u - 1) / u;
}

DiagramPoint interpolate_on_edge(const Edge& e, const Rational& u) {
    if (e.kind != Edge::Kind::nonhorizontal || e.is_vertical())
        throw std::invalid_argument("interpolation needs a non-vertical, nonhorizontal edge");
    const Rational q(e.lo.den()), s(e.hi.den());
    if (u < q || u > s) throw std::out_of_range("u outside edge range");
    DiagramPoint pt;
    pt.u = u;
    if (u == q || u == s) {
        pt.locus = DiagramPoint::Locus::vertex;
        pt.vertex = (u == q) ? e.lo : e.hi;
        pt.y = pt.vertex;
        pt.alpha = (u == q) ? Rational(0) : Rational(1);
        pt.beta = Rational(1) - pt.alpha;
        pt.edge = e;
        return pt;
    }
    pt.locus = DiagramPoint::Locus::edge;
    pt.edge = e;
    pt.alpha = (u - q) / (s - q);
    pt.beta = (s - u) / (s - q);
    pt.y = (pt.alpha * Rational(e.hi.num()) + pt.beta * Rational(e.lo.num())) / u;
    return pt;
}

DiagramPoint point_on_horizontal(const Rational& slope, const Rational& u) {
    if (u < Rational(slope.den())) throw std::out_of_range("u left of the horizontal edge");
    DiagramPoint pt;
    pt.u = u;
    pt.y = slope;
    pt.vertex = slope;
    pt.locus = (u == Rational(slope.den())) ? DiagramPoint::Locus::vertex : DiagramPoint::Locus::horizontal;
    pt.edge = Edge::horizontal(slope);
    return pt;
}

CurveSystem curve_system(const DiagramPoint& p, const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("curve system needs a > 0");
    return {a, a * (p.u - 1), a * p.u * p.y};
}

} // namespace montesinos
