#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "montesinos/rational.hpp"

namespace montesinos {

// Parity class of a slope p/q: the pairing of the four tangle endpoints
// that its arcs realize.
enum class SlopeClass { zero, one, infinity };

SlopeClass slope_class(const Rational& r);
const char* to_string(SlopeClass c);

bool is_farey_pair(const Rational& a, const Rational& b);
// with infinity written as 1/0
bool is_farey_pair_ext(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

// Neighbors of p/q (q >= 2) with smaller denominator, sorted by value.
std::array<Rational, 2> farey_parents(const Rational& r);

struct DiagramVertex {
    enum class Kind { finite, ideal, infinity };
    Kind kind = Kind::finite;
    Rational slope;
};

std::pair<Rational, Rational> vertex_coords(const DiagramVertex& v);

struct Edge {
    enum class Kind { nonhorizontal, horizontal };
    Kind kind = Kind::nonhorizontal;
    // nonhorizontal: lo has the smaller denominator; vertical edges order by y
    Rational lo;
    Rational hi;

    static Edge between(const Rational& a, const Rational& b);
    static Edge horizontal(const Rational& y);
    bool is_vertical() const { return kind == Kind::nonhorizontal && lo.den() == 1 && hi.den() == 1; }
};

struct DiagramPoint {
    enum class Locus { vertex, edge, horizontal };
    Locus locus = Locus::vertex;
    Rational y;
    Rational u;
    Rational vertex;      // at-vertex: the vertex; horizontal: the slope of L
    Edge edge;            // on-edge
    Rational alpha;       // weight on the larger-denominator end
    Rational beta;

    Rational x() const { return (u - 1) / u; }
};

Rational u_of_x(const Rational& x);
Rational x_of_u(const Rational& u);

// u*y is linear in u along a nonhorizontal edge.
DiagramPoint interpolate_on_edge(const Edge& e, const Rational& u);
DiagramPoint point_on_horizontal(const Rational& slope, const Rational& u);

struct CurveSystem {
    Rational a;
    Rational b;
    Rational c;
};

// Coordinates of a point normalized to the given a (> 0).
CurveSystem curve_system(const DiagramPoint& p, const Rational& a);

} // namespace montesinos
