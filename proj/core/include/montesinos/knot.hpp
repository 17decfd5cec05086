#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "montesinos/diagram.hpp"
#include "montesinos/rational.hpp"

namespace montesinos {

struct KnotParams {
    std::array<Rational, 3> t;

    friend bool operator==(const KnotParams&, const KnotParams&) = default;
    friend auto operator<=>(const KnotParams& a, const KnotParams& b) { return a.t <=> b.t; }

    std::string str() const;
    KnotParams mirror() const { return {{-t[0], -t[1], -t[2]}}; }
};

// Accepts "K(-1/2,1/3,1/7)" or "-1/2 1/3 1/7".
KnotParams parse_knot(std::string_view text);

enum class Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

// Boundary points of the three tangles, indexed 4*i + corner.
struct EndpointData {
    int components = 0;
    std::array<bool, 12> inward{};   // orientation of the component through the point
};

// Traces the closed curve through the tangle pairings and the arcs joining
// NE_i to NW_{i+1} and SE_i to SW_{i+1}.
EndpointData trace_endpoints(const KnotParams& k);
int component_count(const KnotParams& k);
// Closed form in the parity classes of the three slopes.
int component_count_by_parity(const KnotParams& k);

// For a knot, the class whose endpoint pairing joins points of equal orientation.
SlopeClass same_orientation_class(const EndpointData& d, int tangle);
// True when the strands cross each disk between tangles in the same direction.
bool parallel_winding(const EndpointData& d);

std::vector<KnotParams> equivalence_moves(const KnotParams& k, int shift_window = 3);

struct CanonicalKnot {
    KnotParams rep;
    bool mirrored = false;   // rep is the canonical form of the mirror image
};

// Fractional parts sorted ascending, integer part carried on the first slope;
// the smaller of the knot and its mirror under that ordering wins.
CanonicalKnot canonicalize(const KnotParams& k);

} // namespace montesinos
