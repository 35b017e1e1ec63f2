#pragma once

// The simplex-fit quantity xi: the largest t with t*Sigma_n inside the
// essential part of every multipoint body, plus the Okounkov-domain volume
// bookkeeping and the scaling/superadditivity property checks.

#include "okb/polytope.hpp"

#include <string>
#include <vector>

namespace okb {

struct BodyFamily {
    int n = 0;                    // shared dimension
    std::vector<Polytope> bodies;  // deglex coordinates, coordinate facets flagged

    static BodyFamily of(int n, std::vector<Polytope> bodies);
};

struct SeshadriResult {
    Rational xi;
    int witness_body = -1;    // body whose facet pins xi (-1 when vacuous)
    int witness_facet = -1;
    std::string capacity_note;
};

// xi = max{t >= 0 : t*Sigma_n inside the closure of every body}, computed as
// the minimum over non-coordinate facets {a.x <= b} of b / max_i(a_i) over
// positive maxima. Empty or lower-dimensional bodies force xi = 0. The sup
// over essential interiors agrees with this closure maximum for polyhedral
// bodies; the witnessing facet is reported so callers can inspect
// essential-facet incidence.
SeshadriResult xi_simplex_fit(const BodyFamily& fam);

struct DomainVolume {
    Rational lebesgue_coeff;  // Lebesgue volume is lebesgue_coeff * pi^pi_power
    int pi_power = 0;
    Rational symplectic;      // n! * Vol(body), the omega_st-normalization
};

DomainVolume okounkov_domain_volume(const Polytope& body);

struct PropertyReport {
    Rational xi_base;
    Rational xi_scaled;
    Rational scale;
    bool scaling_holds = false;
};

// Checks xi(scale * L) = scale * xi(L) given the two body families.
PropertyReport seshadri_property_suite(const BodyFamily& fam, const BodyFamily& fam_scaled,
                                       const Rational& scale);

// Superadditivity under Minkowski-sum inputs: xi(sum) >= xi(a) + xi(b).
bool xi_superadditive(const BodyFamily& fam_sum, const BodyFamily& a, const BodyFamily& b);

// xi^n <= vol_total / N, as exact rationals.
bool upper_bound_check(const BodyFamily& fam, const Rational& vol_total);

}  // namespace okb
