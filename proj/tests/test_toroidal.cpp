#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "montesinos/toroidal.hpp"

using namespace montesinos;

namespace {
std::vector<Rational> slopes_of(const std::vector<ToroidalFinding>& f) {
    std::vector<Rational> out;
    for (const auto& x : f) out.push_back(x.delta);
    return out;
}
}

TEST(Table, EmbeddedRows) {
    const auto& rows = table_rows();
    ASSERT_EQ(rows.size(), 13u);
    EXPECT_EQ(rows[10].slopes[2], "1/7");
    EXPECT_EQ(rows[10].delta_odd, "37/2");
    EXPECT_EQ(rows[10].u_bar, Rational(5, 2));
    EXPECT_THROW(parse_table("1 1/2 1/3\n"), std::runtime_error);
}

TEST(Table, Instantiation) {
    const auto& rows = table_rows();
    auto three = instantiate_row(rows[2], 2, 0);
    ASSERT_EQ(three.size(), 3u);   // n = -2, 1, 2
    EXPECT_EQ(three[2].knot.str(), "K(-1/2,1/3,2/13)");
    EXPECT_EQ(three[2].delta, Rational(0));
    EXPECT_EQ(three[1].knot.str(), "K(-1/2,1/3,1/7)");
    EXPECT_EQ(three[1].delta, Rational(16));

    auto five = instantiate_row(rows[4], 3, 0);
    for (const auto& ti : five) EXPECT_EQ(ti.n % 2, 0);
    EXPECT_EQ(five.front().delta, Rational(9));   // n = -2

    auto pretzel = instantiate_row(rows[1], 0, 5);
    for (const auto& ti : pretzel) {
        EXPECT_EQ(ti.q[0] % 2, 0);
        EXPECT_EQ(ti.delta, Rational(2 * (ti.q[1] + ti.q[2])));
    }
}

TEST(Classifier, ThreeSlopeKnot) {
    auto f = find_toroidal(parse_knot("K(-1/2,1/3,1/7)"));
    EXPECT_EQ(slopes_of(f), (std::vector<Rational>{16, Rational(37, 2), 20}));
    for (const auto& x : f) {
        EXPECT_TRUE(x.report.torus);
        EXPECT_EQ(x.incompressibility, Incompressibility::incompressible);
        EXPECT_TRUE(x.table_case.has_value());
    }
}

TEST(Classifier, MirrorIsReported) {
    auto f = find_toroidal(parse_knot("K(1/2,-1/3,-1/7)"));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_TRUE(f[0].mirrored);
    EXPECT_EQ(f[0].knot.str(), "K(-6/7,1/3,1/2)");
}

TEST(Classifier, TwoSlopeKnot) {
    auto f = find_toroidal(parse_knot("K(-2/3,1/3,1/4)"));
    EXPECT_EQ(slopes_of(f), (std::vector<Rational>{12, 13}));
    EXPECT_EQ(f[0].table_case, 4);
    EXPECT_EQ(f[1].table_case, 12);
}

TEST(Classifier, Errors) {
    EXPECT_THROW(find_toroidal(parse_knot("K(-1/2,1/2,1/2)")), NotAKnot);
    EXPECT_THROW(find_toroidal(parse_knot("K(-1/2,1/3,1/3)")), ExcludedKnot);
    EXPECT_THROW(find_toroidal(parse_knot("K(1/2,-1/5,-1/3)")), ExcludedKnot);
    ClassifierOptions open;
    open.exclusions = ExclusionList{};
    EXPECT_FALSE(find_toroidal(parse_knot("K(-1/2,1/3,1/3)"), open).empty());
}

TEST(Classifier, ExclusionFile) {
    std::string path = ::testing::TempDir() + "exclusions.txt";
    {
        std::ofstream out(path);
        out << "# non-hyperbolic\nK(-1/2,1/3,1/7)\n\n-2/3 1/3 1/4  # trailing\n";
    }
    ExclusionList e = ExclusionList::from_file(path);
    EXPECT_EQ(e.size(), 2u);
    EXPECT_TRUE(e.contains(parse_knot("K(1/2,-1/3,-1/7)")));
    EXPECT_FALSE(e.contains(parse_knot("K(-1/2,1/3,1/3)")));
    std::remove(path.c_str());
    EXPECT_THROW(ExclusionList::from_file(path), std::runtime_error);
}

TEST(Filter, RValueRules) {
    // excluded knot, filter still runs on its systems
    ClassifierOptions open;
    open.exclusions = ExclusionList{};
    auto f = find_toroidal(parse_knot("K(-1/2,1/3,1/3)"), open);
    bool seen = false;
    for (const auto& x : f)
        if (x.u_bar == Rational(1)) {
            seen = true;
            EXPECT_EQ(x.incompressibility, Incompressibility::unknown);
        }
    EXPECT_TRUE(seen);

    auto g = find_toroidal(parse_knot("K(-2/3,1/3,1/4)"));
    EXPECT_EQ(g[1].incompressibility, Incompressibility::incompressible);   // r-cycle (1,1,3), slopes -1
    auto h = find_toroidal(parse_knot("K(-1/2,2/5,1/7)"));
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].delta, Rational(12));
    EXPECT_EQ(h[0].table_case, 10);
}

TEST(Table, MatchAcrossEquivalence) {
    CanonicalKnot c = canonicalize(parse_knot("K(-1/2,1/3,1/7)"));
    EXPECT_EQ(match_table(c.rep, Rational(37, 2)), 11);
    EXPECT_EQ(match_table(c.rep, Rational(16)), 3);
    EXPECT_EQ(match_table(c.rep, Rational(20)), 2);
    EXPECT_FALSE(match_table(c.rep, Rational(17)).has_value());
}

TEST(Census, KnotListIsCanonical) {
    auto ks = census_knots(5);
    EXPECT_TRUE(std::is_sorted(ks.begin(), ks.end()));
    for (const auto& k : ks) {
        EXPECT_EQ(canonicalize(k).rep, k);
        EXPECT_EQ(component_count(k), 1);
    }
}

TEST(Census, SmallDenominatorsArePretzel) {
    auto entries = census(3);
    ASSERT_FALSE(entries.empty());
    for (const auto& e : entries) {
        for (const auto& t : e.knot.t) {
            Rational f = t.frac();
            EXPECT_TRUE(f.num() == 1 || f.num() == f.den() - 1) << e.knot.str();
        }
        for (const auto& f : e.findings) {
            ASSERT_TRUE(f.table_case.has_value()) << e.knot.str();
            if (*f.table_case == 7) {
                // case (7) at n = 1 is K(-1/3,1/3,1/3)
                EXPECT_EQ(e.knot, canonicalize(parse_knot("K(-1/3,1/3,1/3)")).rep);
                EXPECT_EQ(f.delta, Rational(2));
            } else {
                EXPECT_TRUE(*f.table_case == 1 || *f.table_case == 2);
            }
        }
    }
}
