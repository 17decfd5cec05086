// montesinos: boundary slopes and toroidal surgeries of length-3 Montesinos knots.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "montesinos/toroidal.hpp"

using namespace montesinos;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1";

enum Exit { ok = 0, mismatch = 1, parse_error = 2, not_a_knot = 3, excluded = 4 };

struct Flags {
    std::string format = "text";
    std::int64_t max_n = 8;
    std::int64_t max_den = 11;
    std::string u_floor = "1";
    bool mirror = false;
    std::string exclusions;
    std::string query;
    int max_edges = 8;
    std::vector<std::string> knot_args;
};

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

template <std::size_t N>
json ints(const std::array<std::int64_t, N>& v) {
    return json(std::vector<std::int64_t>(v.begin(), v.end()));
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    if (v.is_array()) {
        std::vector<std::string> parts;
        for (const auto& e : v) parts.push_back(cell(e));
        return join(parts, ";");
    }
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// Renders a list of flat records; json output wraps them in an envelope.
void emit(const Flags& f, const std::string& command, json header, const json& records,
          const std::vector<std::string>& columns) {
    if (f.format == "json") {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = command;
        for (auto& [k, v] : header.items()) doc[k] = v;
        doc["records"] = records;
        std::cout << doc.dump(2) << "\n";
        return;
    }
    if (f.format == "csv") {
        std::cout << join(columns, ",") << "\n";
        for (const auto& r : records) {
            std::vector<std::string> row;
            for (const auto& c : columns) row.push_back(csv_escape(cell(r.value(c, json()))));
            std::cout << join(row, ",") << "\n";
        }
        return;
    }
    for (auto& [k, v] : header.items()) std::cout << k << ": " << cell(v) << "\n";
    std::vector<std::size_t> width;
    for (const auto& c : columns) width.push_back(c.size());
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : records) {
        std::vector<std::string> row;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            row.push_back(cell(r.value(columns[i], json())));
            width[i] = std::max(width[i], row.back().size());
        }
        rows.push_back(std::move(row));
    }
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string c = row[i];
            if (i + 1 < row.size()) c.resize(width[i] + 2, ' ');
            s += c;
        }
        std::cout << s << "\n";
    };
    line(columns);
    for (const auto& r : rows) line(r);
}

ClassifierOptions classifier_options(const Flags& f) {
    ClassifierOptions opt;
    opt.solve.u_floor = Rational::parse(f.u_floor);
    if (!f.exclusions.empty()) opt.exclusions = ExclusionList::from_file(f.exclusions);
    return opt;
}

KnotParams knot_from_args(const Flags& f) {
    if (f.knot_args.empty()) throw std::invalid_argument("missing knot");
    return parse_knot(join(f.knot_args, " "));
}

json path_strings(const CandidateSystem& s) {
    json a = json::array();
    for (const auto& p : s.paths) a.push_back(format_path(p));
    return a;
}

json finding_record(const ToroidalFinding& fd, const KnotParams& shown, bool flip) {
    json r;
    r["knot"] = shown.str();
    r["mirrored"] = fd.mirrored;
    r["delta"] = (flip ? -fd.delta : fd.delta).str();
    r["u_bar"] = fd.u_bar.str();
    r["all_u"] = rationals(fd.all_u);
    r["paths"] = path_strings(fd.system);
    r["ebar"] = fd.report.ebar.str();
    r["m"] = ints(fd.report.m_values);
    r["n"] = fd.report.n;
    r["sheets"] = fd.report.sheets;
    r["orientable"] = to_string(fd.report.orientable);
    r["boundary_count"] = fd.report.boundary_count;
    r["chi_hat"] = fd.report.chi_hat;
    r["incompressibility"] = to_string(fd.incompressibility);
    r["table_case"] = fd.table_case ? json(*fd.table_case) : json();
    return r;
}

int cmd_slopes(const Flags& f) {
    KnotParams k = knot_from_args(f);
    if (component_count(k) != 1) throw NotAKnot(k.str() + " is a link");
    CanonicalKnot c = canonicalize(k);
    bool flip = f.mirror && c.mirrored;
    SolveOptions so;
    so.u_floor = Rational::parse(f.u_floor);
    so.max_edges = f.max_edges;
    Rational tau0 = seifert_twist(c.rep);
    json records = json::array();
    for (const auto& s : solve_systems(c.rep, so)) {
        SlopeResult sr = boundary_slope(s, tau0);
        SurfaceReport rep = surface_report(s, c.rep, sr.delta);
        json r;
        r["u_bar"] = s.u_bar.str();
        r["family"] = s.family;
        json lens = json::array();
        for (const auto& p : s.paths) lens.push_back(path_length(p).str());
        r["lengths"] = lens;
        r["paths"] = path_strings(s);
        r["ebar"] = rep.ebar.str();
        r["tau"] = (flip ? -sr.tau : sr.tau).str();
        r["delta"] = (flip ? -sr.delta : sr.delta).str();
        r["chi_hat"] = rep.chi_hat;
        r["sheets"] = rep.sheets;
        r["boundary_count"] = rep.boundary_count;
        r["torus"] = rep.torus;
        records.push_back(std::move(r));
    }
    json header;
    header["knot"] = (f.mirror ? k : c.rep).str();
    header["mirrored"] = c.mirrored;
    header["tau_seifert"] = (flip ? -tau0 : tau0).str();
    emit(f, "slopes", header, records,
         {"u_bar", "family", "lengths", "ebar", "tau", "delta", "chi_hat", "sheets", "boundary_count", "torus", "paths"});
    return ok;
}

const std::vector<std::string> kFindingColumns = {"knot", "delta", "u_bar", "all_u", "ebar", "m", "sheets",
                                                  "orientable", "boundary_count", "incompressibility",
                                                  "table_case", "paths"};

int cmd_toroidal(const Flags& f) {
    KnotParams k = knot_from_args(f);
    auto findings = find_toroidal(k, classifier_options(f));
    CanonicalKnot c = canonicalize(k);
    bool flip = f.mirror && c.mirrored;
    json records = json::array();
    for (const auto& fd : findings) records.push_back(finding_record(fd, f.mirror ? k : c.rep, flip));
    json header;
    header["knot"] = (f.mirror ? k : c.rep).str();
    header["mirrored"] = c.mirrored;
    emit(f, "toroidal", header, records, kFindingColumns);
    return ok;
}

int cmd_verify(const Flags& f) {
    if (f.max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
    auto rows = verify_table(f.max_n, classifier_options(f));
    json records = json::array();
    std::int64_t bad = 0;
    for (const auto& v : rows) {
        json r;
        r["case"] = v.instance.row;
        r["n"] = v.instance.n;
        r["q"] = ints(v.instance.q);
        r["knot"] = v.instance.knot.str();
        r["expected_delta"] = v.instance.delta.str();
        r["expected_u"] = v.instance.u_bar.str();
        r["found_u"] = v.found_u ? json(v.found_u->str()) : json();
        json all = json::array();
        for (const auto& [d, u] : v.findings) all.push_back(d.str() + "@" + u.str());
        r["findings"] = all;
        r["status"] = v.excluded ? "excluded" : v.matched ? "match" : "MISMATCH";
        if (!v.excluded && !v.matched) ++bad;
        records.push_back(std::move(r));
    }
    json header;
    header["rows"] = static_cast<std::int64_t>(rows.size());
    header["mismatches"] = bad;
    emit(f, "verify", header, records,
         {"case", "n", "q", "knot", "expected_delta", "expected_u", "found_u", "status", "findings"});
    return bad ? mismatch : ok;
}

int cmd_census(const Flags& f) {
    auto entries = census(f.max_den, classifier_options(f));
    json records = json::array();
    for (const auto& e : entries) {
        if (f.query == "multi" && e.findings.size() < 2) continue;
        for (const auto& fd : e.findings) {
            if (f.query == "nonintegral" && fd.delta.is_integer()) continue;
            records.push_back(finding_record(fd, e.knot, false));
        }
    }
    json header;
    header["max_den"] = f.max_den;
    header["query"] = f.query.empty() ? "all" : f.query;
    header["records"] = static_cast<std::int64_t>(records.size());
    std::vector<std::string> cols = kFindingColumns;
    if (f.query == "boundary") cols = {"knot", "delta", "u_bar", "n", "sheets", "orientable", "boundary_count", "chi_hat"};
    emit(f, "census", header, records, cols);
    return ok;
}

int cmd_paths(const Flags& f) {
    KnotParams k = knot_from_args(f);
    SkeletonOptions so;
    so.u_floor = Rational::parse(f.u_floor);
    so.max_edges = f.max_edges;
    json records = json::array();
    for (int i = 0; i < 3; ++i) {
        for (const auto& sk : enumerate_skeletons(k.t[i], so)) {
            std::vector<std::string> v;
            for (const auto& r : sk) v.push_back(r.str());
            json r;
            r["tangle"] = i + 1;
            r["slope"] = k.t[i].str();
            r["edges"] = static_cast<std::int64_t>(sk.size()) - 1;
            r["skeleton"] = join(v, " > ");
            records.push_back(std::move(r));
        }
    }
    json header;
    header["knot"] = k.str();
    emit(f, "paths", header, records, {"tangle", "slope", "edges", "skeleton"});
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary slopes and toroidal surgeries of length-3 Montesinos knots"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--u-floor", f.u_floor, "Smallest u considered")->capture_default_str();
    app.add_flag("--mirror", f.mirror, "Report slopes for the knot as written rather than its canonical form");
    app.add_option("--exclusions", f.exclusions, "File of knots to treat as non-hyperbolic")->check(CLI::ExistingFile);
    app.add_option("--max-edges", f.max_edges, "Edge limit per skeleton")->capture_default_str();

    auto* slopes = app.add_subcommand("slopes", "All candidate systems with their slopes");
    slopes->add_option("knot", f.knot_args, "K(a,b,c) or three slopes")->required();
    auto* toroidal = app.add_subcommand("toroidal", "Genus-one candidate surfaces");
    toroidal->add_option("knot", f.knot_args, "K(a,b,c) or three slopes")->required();
    auto* verify = app.add_subcommand("verify", "Check the classification table");
    verify->add_option("--max-n", f.max_n, "Family parameter range")->capture_default_str();
    auto* cens = app.add_subcommand("census", "Toroidal slopes over a range of knots");
    cens->add_option("--max-den", f.max_den, "Largest slope denominator")->capture_default_str();
    cens->add_option("--query", f.query, "Restrict the report")->check(CLI::IsMember({"nonintegral", "multi", "boundary"}));
    auto* paths = app.add_subcommand("paths", "Dump edgepath skeletons");
    paths->add_option("knot", f.knot_args, "K(a,b,c) or three slopes")->required();

    // global flags are accepted after the subcommand as well
    for (auto* sub : {slopes, toroidal, verify, cens, paths}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : parse_error;
    }

    try {
        if (*slopes) return cmd_slopes(f);
        if (*toroidal) return cmd_toroidal(f);
        if (*verify) return cmd_verify(f);
        if (*cens) return cmd_census(f);
        if (*paths) return cmd_paths(f);
    } catch (const NotAKnot& e) {
        std::cerr << "not a knot: " << e.what() << "\n";
        return not_a_knot;
    } catch (const ExcludedKnot& e) {
        std::cerr << "excluded: " << e.what() << "\n";
        return excluded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return mismatch;
    }
    return ok;
}
