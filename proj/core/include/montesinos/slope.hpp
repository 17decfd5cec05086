#pragma once

#include <array>

#include "montesinos/solver.hpp"

namespace montesinos {

struct Twist {
    Rational e_minus;
    Rational e_plus;
    Rational tau() const { return Rational(2) * (e_minus - e_plus); }
};

Twist path_twist(const Edgepath& p);
Twist twist(const CandidateSystem& s);

struct SeifertData {
    bool parallel = false;                 // strands cross the gluing disks coherently
    std::array<SlopeClass, 3> avoided{};   // class never visited by the Seifert paths
    std::array<Skeleton, 3> paths;         // each ends at an integer
    Rational tau;
};

// Edgepath system of the Seifert surface. In each tangle the path descends
// through Farey parents, never entering the class whose pairing joins
// endpoints of equal orientation. With antiparallel strands the paths
// continue from their integers to <inf>, which adds no twist; with parallel
// strands the integer endpoints are joined by vertical edges, adding 2*sum k.
SeifertData seifert_data(const KnotParams& k);
Rational seifert_twist(const KnotParams& k);

struct SlopeResult {
    Rational tau;
    Rational tau_seifert;
    Rational delta;
    Rational e_minus;
    Rational e_plus;
};

SlopeResult boundary_slope(const CandidateSystem& s, const Rational& tau_seifert);
SlopeResult boundary_slope(const CandidateSystem& s, const KnotParams& k);

} // namespace montesinos
