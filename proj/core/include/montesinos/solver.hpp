#pragma once

#include <array>
#include <optional>
#include <vector>

#include "montesinos/edgepath.hpp"
#include "montesinos/knot.hpp"

namespace montesinos {

struct CandidateSystem {
    std::array<Edgepath, 3> paths;
    Rational u_bar;
    std::array<Rational, 3> ys;
    // Set when the equation vanishes identically on an interval: every u in
    // (lo, hi) (or [lo, ...) when closed) solves it; u_bar is a representative.
    bool family = false;
    Rational lo;
    std::optional<Rational> hi;
    bool lo_closed = false;
};

struct SolveOptions {
    Rational u_floor{1};
    int max_edges = 8;
    // prune triples whose full-edge count exceeds this (negative: no limit)
    int max_total_edges = -1;
};

// Sub-path choice for one tangle, with u*y = a*u + b on its u-domain.
struct Piece {
    Skeleton skel;
    PathKind kind = PathKind::constant;
    Rational a;
    Rational b;
    Rational lo;
    std::optional<Rational> hi;   // absent: unbounded (constant paths)
    int full_edges = 0;
};

std::vector<Piece> make_pieces(const Rational& t, const SolveOptions& opt);

std::vector<CandidateSystem> solve_systems(const KnotParams& k, const SolveOptions& opt = {});

// Same skeletons, ending at another u inside the family's range.
CandidateSystem retarget(const CandidateSystem& s, const Rational& u);

bool system_in_domain(const CandidateSystem& s, const Rational& u);

} // namespace montesinos
