#pragma once

// Picard-lattice arithmetic on blow-ups of P^2, Zariski decompositions along
// rays L - t*sum(E_i), the resulting piecewise-linear multipoint Okounkov
// bodies, restricted-volume slices, and the closed-form P^2 body.
//
// Convention: a class d*H - sum_i m_i E_i is stored as (d, m_1..m_N) on the
// blow-up of P^2 at N points, with H^2 = 1, E_i^2 = -1, H.E_i = 0.

#include "okb/piecewise.hpp"
#include "okb/polytope.hpp"

#include <optional>
#include <vector>

namespace okb {

struct PicardClass {
    Rational d;
    std::vector<Rational> m;

    PicardClass() = default;
    PicardClass(Rational deg, std::vector<Rational> mult) : d(std::move(deg)), m(std::move(mult)) {}

    int npoints() const { return (int)m.size(); }
    bool operator==(const PicardClass& o) const { return d == o.d && m == o.m; }
    bool is_zero() const;
};

PicardClass operator+(const PicardClass& a, const PicardClass& b);
PicardClass operator-(const PicardClass& a, const PicardClass& b);
PicardClass operator*(const Rational& s, const PicardClass& a);

Rational intersect(const PicardClass& a, const PicardClass& b);

PicardClass hyperplane_class(int N);
PicardClass exceptional_class(int N, int i);
PicardClass sum_of_exceptionals(int N);
PicardClass canonical_class(int N);

// All (-1)-classes dH - sum m_i E_i with d >= 0, m_i >= -1, C^2 = -1 and
// C.K = -1, including the exceptional classes themselves. Finite for N <= 8.
std::vector<PicardClass> delpezzo_curves(int N);

enum class CurveProvenance { delpezzo_auto, user_supplied };

struct SurfaceSpec {
    int N = 0;
    std::vector<PicardClass> curves;
    CurveProvenance provenance = CurveProvenance::delpezzo_auto;

    static SurfaceSpec delpezzo(int N);
    static SurfaceSpec with_curves(int N, std::vector<PicardClass> curves);
};

struct ZariskiDecomp {
    PicardClass P;             // nef part
    PicardClass Nneg;          // negative part
    std::vector<int> support;  // curve indices spanning Nneg
    std::vector<Rational> coefficients;
};

// Iterative decomposition: grow the support from {C : D.C < 0} until the
// residual P = D - N meets every curve nonnegatively. Throws when D is not
// pseudoeffective for the given curve data or the support Gram degenerates.
ZariskiDecomp zariski(const SurfaceSpec& spec, const PicardClass& D);
ZariskiDecomp zariski_seeded(const SurfaceSpec& spec, const PicardClass& D,
                             const std::vector<int>& initial_support);

// sup{t : L - tG big}: either an exact rational or the quadratic
// (P_t)^2 = a t^2 + b t + c on the final chamber whose smallest root past
// t_start it is.
struct MuValue {
    bool is_rational = false;
    Rational value;
    Rational qa, qb, qc;
    Rational chamber_start;
};

struct RayChamber {
    Rational t_start;
    std::optional<Rational> t_end;  // empty only for the final chamber with irrational mu
    std::vector<int> support;
    std::vector<Rational> coeff_const, coeff_slope;  // N_t coefficients, affine in t
    PicardClass p_const, p_slope;                    // P_t = p_const + t * p_slope

    PicardClass positive_part_at(const Rational& t) const;
};

struct RayDecomposition {
    PicardClass L, G;
    std::vector<Rational> breakpoints;  // interior support changes, strictly inside (0, mu)
    MuValue mu;
    std::vector<RayChamber> chambers;

    const RayChamber& chamber_at(const Rational& t) const;
    bool below_mu(const Rational& t) const;  // exact test t < mu
    Rational volume_at(const Rational& t) const;  // Vol(L - tG) = (P_t)^2
};

// Walk the ray L - tG, advancing the Zariski support chamber by chamber.
// G defaults to the sum of the exceptional classes.
RayDecomposition ray_breakpoints(const SurfaceSpec& spec, const PicardClass& L);
RayDecomposition ray_breakpoints(const SurfaceSpec& spec, const PicardClass& L,
                                 const PicardClass& G);

struct SurfaceRayBody {
    int j = 0;
    std::vector<Rational> breakpoints;  // 0 = t_0 < ... < t_m = mu
    PiecewiseLinear beta;               // beta_j(t) = P_t . E_j (alpha_j == 0)
    Polytope body_blowup_coords;        // {0 <= t <= mu, 0 <= y <= beta(t)}
    Polytope body_deglex_coords;        // preimage under F(x1,x2) = (x1+x2, x1)
};

SurfaceRayBody surface_body(const SurfaceSpec& spec, const PicardClass& L, int j);

struct P2BodyFormula {
    Polytope body_deglex_coords;   // Conv(0, eps e1, 1/(N eps) e2)
    Polytope body_blowup_coords;
    PiecewiseLinear profile;       // restricted volume of L - tE along E_j
};

// Closed form for O(1) on P^2 blown up at N >= 9 very general points, with
// eps = eps_S supplied by the caller (0 < eps <= 1/sqrt(N)).
P2BodyFormula p2_body_formula(int N, const Rational& eps);

// Slice length of the blow-up-coordinate body at first coordinate t; equals
// P_t . E_j. Valid for 0 <= t <= mu (strictly below mu when mu irrational).
Rational restricted_volume_slice(const SurfaceSpec& spec, const PicardClass& L, int j,
                                 const Rational& t);

struct VolumeDifferenceCheck {
    Rational lhs;  // Vol(L) - Vol(L - tG)
    Rational rhs;  // 2 * integral of sum_j beta_j
    bool equal = false;
};

VolumeDifferenceCheck volume_difference_check(const SurfaceSpec& spec, const PicardClass& L,
                                              const Rational& t);

// Number of distinct Zariski supports met by the ray on [0, mu).
int zariski_chamber_count(const SurfaceSpec& spec, const PicardClass& L);

// Independent curve oracle for the multipoint Seshadri constant at general
// points: min over curves with positive total multiplicity of
// (L.C)/(sum m_i), capped by the bigness bound sup{t : (L - tG)^2 >= 0}.
Rational seshadri_curve_infimum(const SurfaceSpec& spec, const PicardClass& L);

}  // namespace okb
