#include <gtest/gtest.h>

#include "montesinos/solver.hpp"
#include "montesinos/surface.hpp"

using namespace montesinos;

namespace {
bool has_u(const std::vector<CandidateSystem>& v, const Rational& u) {
    return std::any_of(v.begin(), v.end(), [&](const CandidateSystem& s) { return s.u_bar == u; });
}
}

TEST(Solver, PiecesOfATangle) {
    auto pieces = make_pieces(Rational(1, 3), {Rational(1), 2, -1});
    int constants = 0;
    for (const auto& p : pieces) {
        if (p.kind == PathKind::constant) {
            ++constants;
            EXPECT_EQ(p.lo, Rational(3));
            EXPECT_FALSE(p.hi.has_value());
        }
        if (p.hi) EXPECT_LE(p.lo, *p.hi);
    }
    EXPECT_EQ(constants, 1);
}

TEST(Solver, SystemsBalance) {
    KnotParams k = parse_knot("K(-6/7,1/3,1/2)");
    auto systems = solve_systems(k);
    ASSERT_FALSE(systems.empty());
    for (const auto& s : systems) {
        Rational sum;
        for (int i = 0; i < 3; ++i) {
            EXPECT_EQ(s.paths[i].u, s.u_bar);
            EXPECT_EQ(s.paths[i].start(), k.t[i]);
            EXPECT_EQ(end_y(s.paths[i]), s.ys[i]);
            EXPECT_TRUE(validate_allowable(s.paths[i])) << format_path(s.paths[i]);
            sum += s.ys[i];
        }
        EXPECT_EQ(sum, Rational(0));
    }
    EXPECT_TRUE(has_u(systems, Rational(5, 2)));
    EXPECT_TRUE(has_u(systems, Rational(6)));
    EXPECT_TRUE(has_u(systems, Rational(1)));
    EXPECT_TRUE(std::is_sorted(systems.begin(), systems.end(),
                               [](const auto& a, const auto& b) { return a.u_bar < b.u_bar; }));
}

TEST(Solver, FloorAndEdgeLimits) {
    KnotParams k = parse_knot("K(-6/7,1/3,1/2)");
    for (const auto& s : solve_systems(k, {Rational(2), 8, -1})) EXPECT_GE(s.u_bar, Rational(2));
    for (const auto& s : solve_systems(k, {Rational(1), 8, 1})) {
        int edges = 0;
        for (const auto& p : s.paths) edges += p.full_edges();
        EXPECT_LE(edges, 1);
    }
    EXPECT_THROW(solve_systems(k, {Rational(1, 2), 8, -1}), std::invalid_argument);
}

TEST(Solver, FamiliesRetarget) {
    // 1/2 + 1/2 tangles can slide together along their horizontal edges
    KnotParams k = parse_knot("K(-1/2,1/4,1/4)");
    for (const auto& s : solve_systems(k)) {
        if (!s.family) continue;
        Rational probe = s.hi ? (s.lo + *s.hi) / Rational(2) : s.lo + Rational(5);
        ASSERT_TRUE(system_in_domain(s, probe));
        CandidateSystem r = retarget(s, probe);
        Rational sum;
        for (const auto& y : r.ys) sum += y;
        EXPECT_EQ(sum, Rational(0));
        EXPECT_EQ(r.u_bar, probe);
    }
}
