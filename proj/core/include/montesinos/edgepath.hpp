#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "montesinos/diagram.hpp"
#include "montesinos/rational.hpp"

namespace montesinos {

enum class PathKind { constant, vertex, partial };

// Vertices traversed right to left, starting at <t>.
using Skeleton = std::vector<Rational>;

struct Edgepath {
    PathKind kind = PathKind::constant;
    Skeleton verts;     // full-edge vertices, verts[0] = t
    Rational toward;    // partial: far end of the final segment
    Rational u;         // ending u-coordinate

    const Rational& start() const { return verts.front(); }
    int full_edges() const { return static_cast<int>(verts.size()) - 1; }
};

Edgepath constant_path(const Rational& t, const Rational& u);

bool is_vertical_step(const Rational& a, const Rational& b);
bool is_minimal(const Skeleton& s);
bool validate_allowable(const Edgepath& p);

Rational partial_beta(const Edgepath& p);
Rational path_length(const Edgepath& p);
DiagramPoint end_point(const Edgepath& p);
inline Rational end_y(const Edgepath& p) { return end_point(p).y; }
Edge final_segment(const Edgepath& p);

// Denominator of the y-intercept at x = 1 of the extended final segment.
std::int64_t r_value(const Edgepath& p);
// Euclidean slope dy/dx of the final segment.
Rational final_segment_slope(const Edgepath& p);

std::int64_t m_value(const Edgepath& p, const Rational& u_bar);

struct SkeletonOptions {
    Rational u_floor{1};
    int max_edges = 8;
};

// Prefix-closed set of minimal monotone vertex sequences from <t>, sorted.
std::vector<Skeleton> enumerate_skeletons(const Rational& t, const SkeletonOptions& opt = {});

// Path following the skeleton whose final point has u-coordinate u; u must
// lie on the last edge (or at or right of <t> for a one-vertex skeleton).
Edgepath truncate_at_u(const Skeleton& s, const Rational& u);

std::string format_path(const Edgepath& p);

} // namespace montesinos
