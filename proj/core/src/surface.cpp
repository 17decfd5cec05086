#include "montesinos/surface.hpp"

#include <numeric>
#include <stdexcept>

namespace montesinos {

const char* to_string(Orientability o) {
    switch (o) {
    case Orientability::yes: return "yes";
    case Orientability::no: return "no";
    case Orientability::undetermined: return "undetermined";
    }
    return "?";
}

const char* to_string(Sign s) {
    switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
    }
    return "?";
}

TangleChi chi_tangle(const Edgepath& p, std::int64_t m, const Rational& u_bar) {
    if (m <= 0) throw std::invalid_argument("invalid m");
    TangleChi out;
    if (p.kind == PathKind::constant) {
        Rational k = Rational(m) * u_bar / Rational(p.start().den());
        if (!k.is_integer()) throw std::invalid_argument("invalid m: m*u/q not integral");
        out.extra_disks = k.num() - m;
        out.chi = 2 * m + out.extra_disks;
        return out;
    }
    Rational c = Rational(m) * (Rational(2) - path_length(p));
    if (!c.is_integer()) throw std::invalid_argument("invalid m: m*|path| not integral");
    out.chi = c.num();
    return out;
}

Rational euler_number_point(const DiagramPoint& v) {
    if (v.locus == DiagramPoint::Locus::horizontal) {
        Rational q(v.vertex.den());
        return Rational(1, 3) + v.u * (Rational(1) / q - Rational(1, 3));
    }
    return (Rational(4) - v.u) / Rational(3);
}

Rational euler_number_path(const Edgepath& p) {
    return euler_number_point(end_point(p)) - path_length(p);
}

Rational euler_sum(const CandidateSystem& s) {
    Rational e;
    for (const auto& p : s.paths) e += euler_number_path(p);
    return e;
}

Sign positivity_region(const Edgepath& p) {
    if (path_length(p) >= Rational(1)) throw std::invalid_argument("classifier needs |path| < 1");
    if (p.kind == PathKind::constant) {
        const std::int64_t q = p.start().den();
        if (q <= 3) return Sign::positive;
        if (q == 4 && p.u == Rational(4)) return Sign::zero;
        return Sign::negative;
    }
    const Edge e = final_segment(p);
    if (e.is_vertical()) throw std::invalid_argument("classifier undefined on vertical edges");
    const std::int64_t q = e.lo.den(), s = e.hi.den();
    if (q == 1 && s <= 3) return Sign::positive;
    if (q == 1 && s == 4) return Sign::zero;
    if (q == 2 && s == 3) {
        auto c = p.u <=> Rational(5, 2);
        if (c > 0) return Sign::positive;
        if (c == 0) return Sign::zero;
    }
    return Sign::negative;
}

bool torus_test(const Rational& ebar, std::int64_t b) {
    return ebar == Rational(b - 1, b);
}

namespace {

// Union-find over the twelve tangle endpoints with a parity bit per edge:
// parity 0 ties two points to the same orientation, 1 to opposite ones.
class ParityGraph {
public:
    ParityGraph() {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    bool join(int a, int b, int parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return ((pa ^ pb) == parity);
        parent_[ra] = rb;
        rel_[ra] = pa ^ pb ^ parity;
        return true;
    }

private:
    std::pair<int, int> find(int a) {
        int p = 0;
        while (parent_[a] != a) {
            p ^= rel_[a];
            a = parent_[a];
        }
        return {a, p};
    }
    std::array<int, 12> parent_{};
    std::array<int, 12> rel_{};
};

constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kPairs{{
    {{{0, 1}, {2, 3}}},   // class 0: NW-NE, SW-SE
    {{{0, 3}, {1, 2}}},   // class 1: NW-SE, NE-SW
    {{{0, 2}, {1, 3}}},   // class inf: NW-SW, NE-SE
}};

int class_index(SlopeClass c) {
    return c == SlopeClass::zero ? 0 : (c == SlopeClass::one ? 1 : 2);
}

// Surface at u = 1 with one sheet: a disk on each side of the tangle row
// and, in each tangle, a chain of bands following the path. Orientations of
// the sheets are recorded on the endpoints they induce; each path fixes
// which endpoints agree, each strand and each connecting arc fixes a pair.
Orientability color_single_sheet(const CandidateSystem& s, const KnotParams& k) {
    ParityGraph g;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        if (!g.join(4 * i + 1, 4 * j + 0, 1)) return Orientability::no;
        if (!g.join(4 * i + 3, 4 * j + 2, 1)) return Orientability::no;
        for (auto pr : kPairs[class_index(slope_class(k.t[i]))])
            if (!g.join(4 * i + pr[0], 4 * i + pr[1], 1)) return Orientability::no;
    }
    for (int i = 0; i < 3; ++i) {
        std::array<bool, 3> seen{};
        for (const auto& v : s.paths[i].verts) seen[class_index(slope_class(v))] = true;
        int missing = -1, count = 0;
        for (int c = 0; c < 3; ++c) {
            if (seen[c]) ++count;
            else missing = c;
        }
        // a band with an odd number of half twists
        if (count == 3) return Orientability::no;
        if (count < 2) return Orientability::undetermined;
        const auto& pairs = kPairs[missing];
        if (!g.join(4 * i + pairs[0][0], 4 * i + pairs[0][1], 0)) return Orientability::no;
        if (!g.join(4 * i + pairs[1][0], 4 * i + pairs[1][1], 0)) return Orientability::no;
        if (!g.join(4 * i + pairs[0][0], 4 * i + pairs[1][0], 1)) return Orientability::no;
    }
    return Orientability::yes;
}

std::int64_t sheet_lcm(const CandidateSystem& s, std::array<std::int64_t, 3>& ms) {
    std::int64_t n = 1;
    for (int i = 0; i < 3; ++i) {
        ms[i] = m_value(s.paths[i], s.u_bar);
        n = lcm_checked(n, ms[i]);
    }
    return n;
}

} // namespace

Orientability orientability(const CandidateSystem& s, const KnotParams& k, const Rational& delta) {
    std::array<std::int64_t, 3> ms{};
    const std::int64_t n = sheet_lcm(s, ms);
    // a loop on a one-sided surface meets it once after a push-off, but
    // every loop meets F' an even number of times when n is even
    if (n % 2 == 0) return Orientability::yes;
    // two-sided with an odd number of boundary curves: slope must be 0
    if (!delta.is_zero()) return Orientability::no;
    if (s.u_bar == Rational(1)) return color_single_sheet(s, k);
    return Orientability::undetermined;
}

SurfaceReport surface_report(const CandidateSystem& s, const KnotParams& k, const Rational& delta) {
    SurfaceReport r;
    r.n = sheet_lcm(s, r.m_values);
    r.orientable = orientability(s, k, delta);
    r.slope_den = delta.den();
    const std::int64_t b = r.slope_den;
    switch (r.orientable) {
    case Orientability::yes:
        r.sheets = r.n;
        r.sheets_alt = r.n;
        break;
    case Orientability::no:
        r.sheets = 2 * r.n;
        r.sheets_alt = 2 * r.n;
        break;
    case Orientability::undetermined:
        r.sheets = (r.n % b == 0) ? r.n : 2 * r.n;
        r.sheets_alt = 2 * r.n;
        break;
    }
    const std::int64_t m = r.sheets;
    if (m % b != 0 || r.sheets_alt % b != 0)
        throw InvariantViolation("slope denominator " + std::to_string(b) + " does not divide sheet count " +
                                 std::to_string(m) + " for " + k.str());

    Rational bp = Rational(m) * (s.u_bar - Rational(1));
    if (!bp.is_integer()) throw InvariantViolation("m(u-1) not integral");
    r.b_param = bp.num();
    // same quantity from the curve-system coordinates of each endpoint
    for (const auto& p : s.paths) {
        CurveSystem cs = curve_system(end_point(p), Rational(m));
        if (cs.b != bp) throw InvariantViolation("curve-system b disagrees with m(u-1)");
    }

    std::int64_t sum_chi = 0;
    for (int i = 0; i < 3; ++i) {
        TangleChi tc = chi_tangle(s.paths[i], m, s.u_bar);
        r.chi_tangles[i] = tc.chi;
        r.extra_E_disks[i] = tc.extra_disks;
        sum_chi += tc.chi;
    }
    r.chi_F = sum_chi - 4 * m - r.b_param;
    r.ebar = euler_sum(s);
    r.boundary_count = m / b;
    r.boundary_count_max = r.sheets_alt / b;
    r.chi_hat = r.chi_F + r.boundary_count;
    Rational other = Rational(m) * (r.ebar - Rational(b - 1, b));
    if (other != Rational(r.chi_hat))
        throw InvariantViolation("capped Euler characteristic disagrees: " + std::to_string(r.chi_hat) + " vs " +
                                 other.str());
    r.torus = torus_test(r.ebar, b);
    return r;
}

} // namespace montesinos
