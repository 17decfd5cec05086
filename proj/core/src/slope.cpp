#include "montesinos/slope.hpp"

#include <stdexcept>

namespace montesinos {

Twist path_twist(const Edgepath& p) {
    Twist t;
    for (std::size_t i = 1; i < p.verts.size(); ++i) {
        if (p.verts[i] < p.verts[i - 1]) t.e_minus += 1;
        else t.e_plus += 1;
    }
    if (p.kind == PathKind::partial) {
        Rational beta = partial_beta(p);
        if (p.toward < p.verts.back()) t.e_minus += beta;
        else t.e_plus += beta;
    }
    return t;
}

Twist twist(const CandidateSystem& s) {
    Twist t;
    for (const auto& p : s.paths) {
        Twist q = path_twist(p);
        t.e_minus += q.e_minus;
        t.e_plus += q.e_plus;
    }
    return t;
}

SeifertData seifert_data(const KnotParams& k) {
    EndpointData d = trace_endpoints(k);
    if (d.components != 1) throw std::invalid_argument("Seifert calibration needs a knot");
    SeifertData out;
    out.parallel = parallel_winding(d);
    Rational total;
    Rational ends;
    for (int i = 0; i < 3; ++i) {
        SlopeClass x = same_orientation_class(d, i);
        if (out.parallel != (x == SlopeClass::infinity))
            throw std::runtime_error("calibration failure: inconsistent orientation pattern for " + k.str());
        out.avoided[i] = x;
        Skeleton path{k.t[i]};
        while (!path.back().is_integer()) {
            auto par = farey_parents(path.back());
            bool ok0 = slope_class(par[0]) != x, ok1 = slope_class(par[1]) != x;
            if (ok0 == ok1) throw std::runtime_error("calibration failure: ambiguous Seifert step for " + k.str());
            path.push_back(ok0 ? par[0] : par[1]);
        }
        for (std::size_t j = 1; j < path.size(); ++j) total += path[j] < path[j - 1] ? Rational(2) : Rational(-2);
        ends += path.back();
        out.paths[i] = std::move(path);
    }
    if (out.parallel) total += Rational(2) * ends;
    out.tau = total;
    return out;
}

Rational seifert_twist(const KnotParams& k) {
    return seifert_data(k).tau;
}

SlopeResult boundary_slope(const CandidateSystem& s, const Rational& tau_seifert) {
    Twist t = twist(s);
    SlopeResult r;
    r.e_minus = t.e_minus;
    r.e_plus = t.e_plus;
    r.tau = t.tau();
    r.tau_seifert = tau_seifert;
    r.delta = r.tau - tau_seifert;
    return r;
}

SlopeResult boundary_slope(const CandidateSystem& s, const KnotParams& k) {
    return boundary_slope(s, seifert_twist(k));
}

} // namespace montesinos
