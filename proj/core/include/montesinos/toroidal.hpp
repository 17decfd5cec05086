#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "montesinos/slope.hpp"
#include "montesinos/surface.hpp"

namespace montesinos {

enum class Incompressibility { incompressible, compressible, unknown };
const char* to_string(Incompressibility i);

Incompressibility incompressibility_filter(const CandidateSystem& s);

// Knots reported as non-hyperbolic; membership is by canonical form.
class ExclusionList {
public:
    static ExclusionList defaults();
    static ExclusionList from_file(const std::string& path);
    void add(const KnotParams& k) { canon_.insert(canonicalize(k).rep); }
    bool contains(const KnotParams& k) const { return canon_.count(canonicalize(k).rep) > 0; }
    std::size_t size() const { return canon_.size(); }

private:
    std::set<KnotParams> canon_;
};

struct NotAKnot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ExcludedKnot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One row of the embedded classification table.
struct TableRow {
    int id = 0;
    std::array<std::string, 3> slopes;   // "p/q", "cf(a)", "-cf(a)", "1/q1" ...
    std::string domain;                  // single, all, even, odd, pretzel-odd, pretzel-even
    std::string delta_odd;
    std::string delta_even;
    Rational u_bar;
};

const std::vector<TableRow>& table_rows();
std::vector<TableRow> parse_table(const std::string& text);
const std::string& table_text();

struct TableInstance {
    int row = 0;
    std::int64_t n = 0;              // family parameter; 0 for single rows
    std::array<std::int64_t, 3> q{}; // pretzel parameters
    KnotParams knot;
    Rational delta;
    Rational u_bar;
};

// All instances of one row: families over n in [-n_range, n_range],
// pretzel rows over 2 <= |q_i| <= q_max.
std::vector<TableInstance> instantiate_row(const TableRow& row, std::int64_t n_range, std::int64_t q_max);

struct ToroidalFinding {
    KnotParams knot;          // canonical
    bool mirrored = false;    // input is the mirror of the canonical knot
    Rational delta;           // for the canonical knot
    Rational u_bar;
    std::vector<Rational> all_u;
    CandidateSystem system;
    SurfaceReport report;
    Incompressibility incompressibility = Incompressibility::unknown;
    std::optional<int> table_case;
};

struct ClassifierOptions {
    SolveOptions solve{Rational(1), 8, 3};
    ExclusionList exclusions = ExclusionList::defaults();
};

// Findings for the canonical form of k, merged by slope.
std::vector<ToroidalFinding> find_toroidal(const KnotParams& k, const ClassifierOptions& opt = {});

std::optional<int> match_table(const KnotParams& canonical, const Rational& delta);

struct VerificationRow {
    TableInstance instance;
    bool excluded = false;
    bool matched = false;
    std::optional<Rational> found_u;   // smallest u for the expected slope
    std::vector<std::pair<Rational, Rational>> findings;   // (delta, u) in the instance's own frame
};

std::vector<VerificationRow> verify_table(std::int64_t n_range, const ClassifierOptions& opt = {});

struct CensusEntry {
    KnotParams knot;
    std::vector<ToroidalFinding> findings;
};

// Canonical knots whose slopes have denominators <= max_den.
std::vector<KnotParams> census_knots(std::int64_t max_den);
std::vector<CensusEntry> census(std::int64_t max_den, const ClassifierOptions& opt = {});

} // namespace montesinos
