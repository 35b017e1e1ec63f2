#include "okb/seshadri.hpp"

#include <algorithm>

namespace okb {

namespace {

const char* kCapacityNote =
    "xi is the simplex parameter of Sigma_n; under mu(z) = (|z_1|^2, ..., |z_n|^2) "
    "the ball B_r maps onto r^2 Sigma_n, so the ball-radius convention differs from "
    "the simplex parameter by a square.";

}  // namespace

BodyFamily BodyFamily::of(int n, std::vector<Polytope> bodies) {
    BodyFamily fam;
    fam.n = n;
    for (const auto& b : bodies) {
        if (b.dim != n) throw PreconditionError("body family dimension mismatch");
        for (const auto& v : b.vertices)
            for (const auto& x : v.e)
                if (x < 0)
                    throw PreconditionError("bodies must lie in the nonnegative orthant");
    }
    fam.bodies = std::move(bodies);
    return fam;
}

SeshadriResult xi_simplex_fit(const BodyFamily& fam) {
    if (fam.bodies.empty()) throw PreconditionError("empty body family");
    SeshadriResult res;
    res.capacity_note = kCapacityNote;
    res.xi = 0;

    bool pinned = false;
    for (std::size_t bi = 0; bi < fam.bodies.size(); ++bi) {
        const Polytope& body = fam.bodies[bi];
        if (body.empty() || !body.full_dim()) {
            res.xi = 0;
            res.witness_body = (int)bi;
            res.witness_facet = -1;
            return res;
        }
        for (std::size_t hi = 0; hi < body.halfspaces.size(); ++hi) {
            if (std::find(body.coordinate_facets.begin(), body.coordinate_facets.end(), (int)hi) !=
                body.coordinate_facets.end())
                continue;
            const Halfspace& h = body.halfspaces[hi];
            Rational max_coef = h.normal[0];
            for (std::size_t i = 1; i < h.normal.dim(); ++i)
                if (h.normal[i] > max_coef) max_coef = h.normal[i];
            if (max_coef <= 0) {
                // The simplex vertices t*e_i trivially satisfy a.x <= b here
                // unless the body misses the origin altogether.
                if (h.offset < 0) {
                    res.xi = 0;
                    res.witness_body = (int)bi;
                    res.witness_facet = (int)hi;
                    return res;
                }
                continue;
            }
            Rational bound = h.offset / max_coef;
            if (!pinned || bound < res.xi) {
                pinned = true;
                res.xi = bound;
                res.witness_body = (int)bi;
                res.witness_facet = (int)hi;
            }
        }
    }
    if (res.xi < 0) res.xi = 0;
    return res;
}

DomainVolume okounkov_domain_volume(const Polytope& body) {
    DomainVolume dv;
    Rational vol = volume(body);
    Rational factorial = 1;
    for (int i = 2; i <= body.dim; ++i) factorial *= i;
    dv.lebesgue_coeff = vol;
    dv.pi_power = body.dim;
    dv.symplectic = factorial * vol;
    return dv;
}

PropertyReport seshadri_property_suite(const BodyFamily& fam, const BodyFamily& fam_scaled,
                                       const Rational& scale) {
    if (scale <= 0) throw PreconditionError("scale must be positive");
    PropertyReport rep;
    rep.scale = scale;
    rep.xi_base = xi_simplex_fit(fam).xi;
    rep.xi_scaled = xi_simplex_fit(fam_scaled).xi;
    rep.scaling_holds = rep.xi_scaled == scale * rep.xi_base;
    return rep;
}

bool xi_superadditive(const BodyFamily& fam_sum, const BodyFamily& a, const BodyFamily& b) {
    return xi_simplex_fit(fam_sum).xi >= xi_simplex_fit(a).xi + xi_simplex_fit(b).xi;
}

bool upper_bound_check(const BodyFamily& fam, const Rational& vol_total) {
    Rational xi = xi_simplex_fit(fam).xi;
    Rational pow = 1;
    for (int i = 0; i < fam.n; ++i) pow *= xi;
    return pow * Rational((long)fam.bodies.size()) <= vol_total;
}

}  // namespace okb
