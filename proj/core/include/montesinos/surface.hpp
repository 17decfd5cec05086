#pragma once

#include <array>
#include <cstdint>

#include "montesinos/knot.hpp"
#include "montesinos/solver.hpp"

namespace montesinos {

enum class Orientability { yes, no, undetermined };
const char* to_string(Orientability o);

struct TangleChi {
    std::int64_t chi = 0;
    std::int64_t extra_disks = 0;   // E-disks, constant paths only
};

TangleChi chi_tangle(const Edgepath& p, std::int64_t m, const Rational& u_bar);

Rational euler_number_point(const DiagramPoint& v);
Rational euler_number_path(const Edgepath& p);
Rational euler_sum(const CandidateSystem& s);

enum class Sign { negative, zero, positive };
const char* to_string(Sign s);

// Sign of e(path) for |path| < 1, read off from the endpoint's location.
Sign positivity_region(const Edgepath& p);

bool torus_test(const Rational& ebar, std::int64_t b);

// F' is two-sided whenever n is even; a two-sided F' with n odd has slope 0.
// The remaining case at u = 1 is settled by 2-coloring the tangle endpoints.
Orientability orientability(const CandidateSystem& s, const KnotParams& k, const Rational& delta);

struct SurfaceReport {
    std::array<std::int64_t, 3> m_values{};
    std::int64_t n = 0;
    std::int64_t sheets = 0;
    std::int64_t sheets_alt = 0;          // the other admissible sheet count when orientability is open
    std::array<std::int64_t, 3> chi_tangles{};
    std::int64_t chi_F = 0;
    std::int64_t b_param = 0;
    Rational ebar;
    std::int64_t slope_den = 1;
    std::int64_t boundary_count = 0;
    std::int64_t boundary_count_max = 0;  // upper bound over both sheet counts
    std::int64_t chi_hat = 0;
    bool torus = false;
    Orientability orientable = Orientability::undetermined;
    std::array<std::int64_t, 3> extra_E_disks{};
};

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

SurfaceReport surface_report(const CandidateSystem& s, const KnotParams& k, const Rational& delta);

} // namespace montesinos
