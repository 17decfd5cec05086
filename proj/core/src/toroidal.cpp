#include "montesinos/toroidal.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace montesinos {

namespace detail {
extern const char* const kTableText;
}

const char* to_string(Incompressibility i) {
    switch (i) {
    case Incompressibility::incompressible: return "incompressible";
    case Incompressibility::compressible: return "compressible";
    case Incompressibility::unknown: return "unknown";
    }
    return "?";
}

Incompressibility incompressibility_filter(const CandidateSystem& s) {
    for (const auto& p : s.paths)
        if (p.kind == PathKind::constant) return Incompressibility::incompressible;
    std::array<std::int64_t, 3> r{};
    std::array<Rational, 3> slope;
    for (int i = 0; i < 3; ++i) {
        if (final_segment(s.paths[i]).is_vertical()) return Incompressibility::unknown;
        r[i] = r_value(s.paths[i]);
        slope[i] = final_segment_slope(s.paths[i]);
    }
    auto sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (!(sorted[0] == 1 && (sorted[1] == 1 || sorted[1] == 2))) return Incompressibility::incompressible;

    // pairs (i, j) carrying r-values {1,1} or {1,2}, with i the r = 1 path
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j || r[i] != 1 || (r[j] != 1 && r[j] != 2)) continue;
            if (slope[i] == slope[j] && slope[i].abs() == Rational(1)) return Incompressibility::incompressible;
        }
    }
    if ((slope[0].sign() > 0 && slope[1].sign() > 0 && slope[2].sign() > 0) ||
        (slope[0].sign() < 0 && slope[1].sign() < 0 && slope[2].sign() < 0))
        return Incompressibility::incompressible;

    // pretzel surfaces at u = 1 with r-cycle (1,2,r3)
    if (s.u_bar == Rational(1) && sorted[1] == 2 && sorted[0] == 1) {
        bool exception = false;
        for (int i = 0; i < 3; ++i) {
            if (r[i] != 1) continue;
            int j = (i + 1) % 3, k = (i + 2) % 3;
            bool opposite = slope[i].sign() * slope[j].sign() < 0 && slope[i].sign() * slope[k].sign() < 0;
            std::int64_t r3 = r[j] == 2 ? r[k] : r[j];
            if (opposite && (r3 == 2 || r3 == 4)) exception = true;
        }
        if (!exception) return Incompressibility::incompressible;
    }
    return Incompressibility::unknown;
}

ExclusionList ExclusionList::defaults() {
    ExclusionList e;
    e.add(parse_knot("K(-1/2,1/3,1/3)"));
    e.add(parse_knot("K(-1/2,1/3,1/5)"));
    return e;
}

ExclusionList ExclusionList::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read exclusion file " + path);
    ExclusionList e;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        e.add(parse_knot(line));
    }
    return e;
}

// ---------------------------------------------------------------------------
// table

const std::string& table_text() {
    static const std::string text = detail::kTableText;
    return text;
}

std::vector<TableRow> parse_table(const std::string& text) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        TableRow r;
        std::string u;
        if (!(ls >> r.id)) continue;
        if (!(ls >> r.slopes[0] >> r.slopes[1] >> r.slopes[2] >> r.domain >> r.delta_odd >> r.delta_even >> u))
            throw std::runtime_error("malformed table row " + std::to_string(r.id));
        r.u_bar = Rational::parse(u);
        rows.push_back(r);
    }
    return rows;
}

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = parse_table(table_text());
    return rows;
}

namespace {

Rational eval_slope(const std::string& s, std::int64_t n, const std::array<std::int64_t, 3>& q) {
    bool neg = !s.empty() && s[0] == '-';
    std::string body = neg ? s.substr(1) : s;
    Rational v;
    if (body.rfind("cf(", 0) == 0) {
        std::int64_t a = std::stoll(body.substr(3, body.size() - 4));
        v = Rational(n, a * n + 1);
    } else if (body.rfind("1/q", 0) == 0) {
        v = Rational(1, q.at(std::stoi(body.substr(3)) - 1));
    } else {
        v = Rational::parse(body);
    }
    return neg ? -v : v;
}

// integer-linear expression in n, q2, q3, or a plain rational
Rational eval_delta(const std::string& expr, std::int64_t n, const std::array<std::int64_t, 3>& q) {
    if (expr.find_first_of("nq") == std::string::npos) return Rational::parse(expr);
    Rational total;
    std::size_t i = 0;
    while (i < expr.size()) {
        int sign = 1;
        if (expr[i] == '+' || expr[i] == '-') {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) ++j;
        std::int64_t coef = j > i ? std::stoll(expr.substr(i, j - i)) : 1;
        i = j;
        std::int64_t var = 1;
        if (i < expr.size() && expr[i] == 'n') {
            var = n;
            ++i;
        } else if (i < expr.size() && expr[i] == 'q') {
            var = q.at(expr[i + 1] - '1');
            i += 2;
        }
        total += Rational(sign * coef * var);
    }
    return total;
}

bool admissible(const std::string& domain, std::int64_t n) {
    if (domain == "all") return n != 0 && n != -1;
    if (domain == "even") return n != 0 && n % 2 == 0;
    if (domain == "odd") return n != -1 && n % 2 != 0;
    return false;
}

TableInstance make_instance(const TableRow& row, std::int64_t n, const std::array<std::int64_t, 3>& q) {
    TableInstance ti;
    ti.row = row.id;
    ti.n = n;
    ti.q = q;
    for (int i = 0; i < 3; ++i) ti.knot.t[i] = eval_slope(row.slopes[i], n, q);
    const std::string& d = (n % 2 != 0) ? row.delta_odd : row.delta_even;
    ti.delta = eval_delta(d == "-" ? row.delta_odd : d, n, q);
    ti.u_bar = row.u_bar;
    return ti;
}

std::vector<std::int64_t> signed_range(std::int64_t q_max, bool even) {
    std::vector<std::int64_t> out;
    for (std::int64_t a = -q_max; a <= q_max; ++a)
        if (std::abs(a) >= 2 && (a % 2 == 0) == even) out.push_back(a);
    return out;
}

} // namespace

std::vector<TableInstance> instantiate_row(const TableRow& row, std::int64_t n_range, std::int64_t q_max) {
    std::vector<TableInstance> out;
    if (row.domain == "single") {
        out.push_back(make_instance(row, 0, {}));
    } else if (row.domain == "pretzel-odd") {
        auto odd = signed_range(q_max, false);
        for (std::size_t a = 0; a < odd.size(); ++a)
            for (std::size_t b = a; b < odd.size(); ++b)
                for (std::size_t c = b; c < odd.size(); ++c)
                    out.push_back(make_instance(row, 0, {odd[a], odd[b], odd[c]}));
    } else if (row.domain == "pretzel-even") {
        auto odd = signed_range(q_max, false);
        for (auto e : signed_range(q_max, true))
            for (std::size_t b = 0; b < odd.size(); ++b)
                for (std::size_t c = b; c < odd.size(); ++c)
                    out.push_back(make_instance(row, 0, {e, odd[b], odd[c]}));
    } else {
        for (std::int64_t n = -n_range; n <= n_range; ++n)
            if (admissible(row.domain, n)) out.push_back(make_instance(row, n, {}));
    }
    return out;
}

std::optional<int> match_table(const KnotParams& canonical, const Rational& delta) {
    std::int64_t max_den = 0;
    for (const auto& t : canonical.t) max_den = std::max(max_den, t.den());
    for (const auto& row : table_rows()) {
        std::vector<TableInstance> cands;
        if (row.domain == "pretzel-odd" || row.domain == "pretzel-even") {
            // each slope must be +-1/q modulo 1
            std::array<std::vector<std::int64_t>, 3> qs;
            for (int i = 0; i < 3; ++i) {
                Rational f = canonical.t[i].frac();
                if (f.num() == 1) qs[i].push_back(f.den());
                if (f.num() == f.den() - 1) qs[i].push_back(-f.den());
            }
            std::array<int, 3> perm{0, 1, 2};
            do {
                for (auto a : qs[perm[0]])
                    for (auto b : qs[perm[1]])
                        for (auto c : qs[perm[2]]) {
                            bool odd = a % 2 != 0 && b % 2 != 0 && c % 2 != 0;
                            bool even = a % 2 == 0 && b % 2 != 0 && c % 2 != 0;
                            if ((row.domain == "pretzel-odd" && odd) || (row.domain == "pretzel-even" && even))
                                cands.push_back(make_instance(row, 0, {a, b, c}));
                        }
            } while (std::next_permutation(perm.begin(), perm.end()));
        } else {
            cands = instantiate_row(row, max_den + 2, 0);
        }
        for (const auto& ti : cands) {
            CanonicalKnot c = canonicalize(ti.knot);
            if (c.rep != canonical) continue;
            Rational d = c.mirrored ? -ti.delta : ti.delta;
            if (d == delta) return row.id;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// classifier

namespace {

std::optional<CandidateSystem> toroidal_point(const CandidateSystem& sys, const Rational& delta) {
    const std::int64_t b = delta.den();
    const Rational target(b - 1, b);
    if (!sys.family) {
        if (torus_test(euler_sum(sys), b)) return sys;
        return std::nullopt;
    }
    Rational u1, u2;
    if (sys.hi) {
        u1 = sys.lo + (*sys.hi - sys.lo) / Rational(3);
        u2 = sys.lo + Rational(2) * (*sys.hi - sys.lo) / Rational(3);
    } else {
        u1 = sys.lo + 1;
        u2 = sys.lo + 2;
    }
    Rational e1 = euler_sum(retarget(sys, u1)), e2 = euler_sum(retarget(sys, u2));
    Rational k = (e2 - e1) / (u2 - u1);
    if (k.is_zero()) {
        if (e1 == target) return sys;
        return std::nullopt;
    }
    Rational u = u1 + (target - e1) / k;
    if (!system_in_domain(sys, u)) return std::nullopt;
    return retarget(sys, u);
}

void check_family_slope(const CandidateSystem& sys, const Rational& tau0, const Rational& delta) {
    std::vector<Rational> probes;
    if (sys.lo_closed) probes.push_back(sys.lo);
    if (sys.hi) {
        probes.push_back((sys.lo + *sys.hi) / Rational(2));
        probes.push_back(sys.lo + (*sys.hi - sys.lo) / Rational(7));
    } else {
        probes.push_back(sys.lo + Rational(3));
    }
    for (const auto& u : probes)
        if (boundary_slope(retarget(sys, u), tau0).delta != delta)
            throw InvariantViolation("slope varies along a solution family");
}

} // namespace

std::vector<ToroidalFinding> find_toroidal(const KnotParams& k, const ClassifierOptions& opt) {
    if (component_count(k) != 1) throw NotAKnot(k.str() + " is a link");
    if (opt.exclusions.contains(k)) throw ExcludedKnot(k.str() + " is on the non-hyperbolic exclusion list");
    CanonicalKnot canon = canonicalize(k);
    const KnotParams& rep = canon.rep;
    const Rational tau0 = seifert_twist(rep);

    std::map<Rational, ToroidalFinding> by_slope;
    for (const auto& sys : solve_systems(rep, opt.solve)) {
        Rational delta = boundary_slope(sys, tau0).delta;
        if (sys.family) check_family_slope(sys, tau0, delta);
        auto hit = toroidal_point(sys, delta);
        if (!hit) continue;
        ToroidalFinding f;
        f.knot = rep;
        f.mirrored = canon.mirrored;
        f.delta = delta;
        f.u_bar = hit->u_bar;
        f.system = *hit;
        f.report = surface_report(*hit, rep, delta);
        if (!f.report.torus) throw InvariantViolation("torus test disagrees between solver and report");
        f.incompressibility = incompressibility_filter(*hit);
        auto it = by_slope.find(delta);
        if (it == by_slope.end()) {
            f.all_u = {f.u_bar};
            by_slope.emplace(delta, std::move(f));
            continue;
        }
        ToroidalFinding& cur = it->second;
        auto all = cur.all_u;
        if (std::find(all.begin(), all.end(), f.u_bar) == all.end()) all.push_back(f.u_bar);
        std::sort(all.begin(), all.end());
        if (f.u_bar < cur.u_bar) cur = std::move(f);
        cur.all_u = std::move(all);
    }
    std::vector<ToroidalFinding> out;
    for (auto& [d, f] : by_slope) {
        f.table_case = match_table(rep, d);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<VerificationRow> verify_table(std::int64_t n_range, const ClassifierOptions& opt) {
    std::vector<VerificationRow> out;
    for (const auto& row : table_rows()) {
        for (auto& ti : instantiate_row(row, n_range, n_range + 3)) {
            VerificationRow vr;
            vr.instance = ti;
            if (opt.exclusions.contains(ti.knot)) {
                vr.excluded = true;
                out.push_back(std::move(vr));
                continue;
            }
            auto findings = find_toroidal(ti.knot, opt);
            for (const auto& f : findings) {
                Rational d = f.mirrored ? -f.delta : f.delta;
                vr.findings.emplace_back(d, f.u_bar);
                if (d == ti.delta) vr.found_u = f.u_bar;
            }
            std::sort(vr.findings.begin(), vr.findings.end());
            vr.matched = vr.found_u && *vr.found_u == ti.u_bar;
            out.push_back(std::move(vr));
        }
    }
    return out;
}

std::vector<KnotParams> census_knots(std::int64_t max_den) {
    std::vector<Rational> fracs;
    for (std::int64_t q = 2; q <= max_den; ++q)
        for (std::int64_t p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) fracs.emplace_back(p, q);
    std::sort(fracs.begin(), fracs.end());
    std::vector<KnotParams> out;
    // with every |path| <= 3 and no vertical edges, each y_i lies between
    // the integers around t_i, so the integer parts sum to -3..0
    for (std::size_t a = 0; a < fracs.size(); ++a)
        for (std::size_t b = a; b < fracs.size(); ++b)
            for (std::size_t c = b; c < fracs.size(); ++c)
                for (std::int64_t e = -3; e <= 0; ++e) {
                    KnotParams k{{fracs[a] + e, fracs[b], fracs[c]}};
                    if (component_count_by_parity(k) != 1) continue;
                    if (canonicalize(k).rep != k) continue;
                    out.push_back(k);
                }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CensusEntry> census(std::int64_t max_den, const ClassifierOptions& opt) {
    std::vector<CensusEntry> out;
    for (const auto& k : census_knots(max_den)) {
        if (opt.exclusions.contains(k)) continue;
        auto f = find_toroidal(k, opt);
        if (!f.empty()) out.push_back({k, std::move(f)});
    }
    return out;
}

} // namespace montesinos
