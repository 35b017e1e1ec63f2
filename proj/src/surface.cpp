#include "okb/surface.hpp"

#include <algorithm>
#include <set>

namespace okb {

bool PicardClass::is_zero() const {
    if (d != 0) return false;
    for (const auto& x : m)
        if (x != 0) return false;
    return true;
}

PicardClass operator+(const PicardClass& a, const PicardClass& b) {
    if (a.npoints() != b.npoints()) throw PreconditionError("Picard class size mismatch");
    PicardClass r = a;
    r.d += b.d;
    for (int i = 0; i < a.npoints(); ++i) r.m[(std::size_t)i] += b.m[(std::size_t)i];
    return r;
}

PicardClass operator-(const PicardClass& a, const PicardClass& b) {
    if (a.npoints() != b.npoints()) throw PreconditionError("Picard class size mismatch");
    PicardClass r = a;
    r.d -= b.d;
    for (int i = 0; i < a.npoints(); ++i) r.m[(std::size_t)i] -= b.m[(std::size_t)i];
    return r;
}

PicardClass operator*(const Rational& s, const PicardClass& a) {
    PicardClass r = a;
    r.d *= s;
    for (auto& x : r.m) x *= s;
    return r;
}

Rational intersect(const PicardClass& a, const PicardClass& b) {
    if (a.npoints() != b.npoints()) throw PreconditionError("Picard class size mismatch");
    Rational s = a.d * b.d;
    for (int i = 0; i < a.npoints(); ++i) s -= a.m[(std::size_t)i] * b.m[(std::size_t)i];
    return s;
}

PicardClass hyperplane_class(int N) { return {Rational(1), std::vector<Rational>((std::size_t)N, 0)}; }

PicardClass exceptional_class(int N, int i) {
    if (i < 0 || i >= N) throw PreconditionError("exceptional index out of range");
    PicardClass c{Rational(0), std::vector<Rational>((std::size_t)N, 0)};
    c.m[(std::size_t)i] = -1;
    return c;
}

PicardClass sum_of_exceptionals(int N) {
    return {Rational(0), std::vector<Rational>((std::size_t)N, -1)};
}

PicardClass canonical_class(int N) {
    return {Rational(-3), std::vector<Rational>((std::size_t)N, -1)};
}

namespace {

void enumerate_mults(int pos, int N, long sum_left, long sq_left, std::vector<Rational>& m,
                     long d, std::vector<PicardClass>& out) {
    if (pos == N) {
        if (sum_left == 0 && sq_left == 0) out.emplace_back(Rational(d), m);
        return;
    }
    int remaining = N - pos;
    long vmax = 0;
    while ((vmax + 1) * (vmax + 1) <= sq_left) ++vmax;
    for (long v = -1; v <= vmax; ++v) {
        if (v * v > sq_left) continue;
        // Everything still to place is >= -1 and has squares summing to what is left.
        long s = sum_left - v;
        long q = sq_left - v * v;
        if (s < -(remaining - 1)) continue;
        // Coarse upper bound: each later entry contributes at most sqrt(q).
        long max_later = 0;
        while ((max_later + 1) * (max_later + 1) <= q) ++max_later;
        if (s > (remaining - 1) * max_later) continue;
        m[(std::size_t)pos] = Rational(v);
        enumerate_mults(pos + 1, N, s, q, m, d, out);
    }
}

}  // namespace

std::vector<PicardClass> delpezzo_curves(int N) {
    if (N < 1 || N > 8) throw PreconditionError("del Pezzo curve enumeration needs 1 <= N <= 8");
    std::vector<PicardClass> out;
    for (long d = 0; d <= 7; ++d) {
        // C^2 = -1 and C.K = -1 pin sum(m) = 3d - 1 and sum(m^2) = d^2 + 1.
        std::vector<Rational> m((std::size_t)N);
        enumerate_mults(0, N, 3 * d - 1, d * d + 1, m, d, out);
    }
    std::sort(out.begin(), out.end(), [](const PicardClass& a, const PicardClass& b) {
        if (a.d != b.d) return a.d < b.d;
        return a.m < b.m;
    });
    return out;
}

SurfaceSpec SurfaceSpec::delpezzo(int N) {
    SurfaceSpec spec;
    spec.N = N;
    spec.curves = delpezzo_curves(N);
    spec.provenance = CurveProvenance::delpezzo_auto;
    PicardClass K = canonical_class(N);
    for (const auto& C : spec.curves)
        if (intersect(C, C) != -1 || intersect(C, K) != -1)
            throw InvariantError("del Pezzo enumeration produced a non-(-1)-class");
    return spec;
}

SurfaceSpec SurfaceSpec::with_curves(int N, std::vector<PicardClass> curves) {
    SurfaceSpec spec;
    spec.N = N;
    spec.provenance = CurveProvenance::user_supplied;
    for (const auto& C : curves) {
        if (C.npoints() != N) throw PreconditionError("curve class size does not match N");
        if (intersect(C, C) >= 0)
            throw PreconditionError("user curve classes must have negative self-intersection");
    }
    spec.curves = std::move(curves);
    return spec;
}

namespace {

RatMatrix gram_matrix(const SurfaceSpec& spec, const std::vector<int>& support) {
    RatMatrix g(support.size(), support.size());
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = 0; j < support.size(); ++j)
            g.at(i, j) = intersect(spec.curves[(std::size_t)support[i]],
                                   spec.curves[(std::size_t)support[j]]);
    return g;
}

// Sylvester test: symmetric M is negative definite iff (-1)^k det(M_k) > 0
// for every leading principal minor.
bool negative_definite(const RatMatrix& g) {
    for (std::size_t k = 1; k <= g.rows; ++k) {
        RatMatrix lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = g.at(i, j);
        Rational det = determinant(lead);
        if (k % 2 == 1 ? det >= 0 : det <= 0) return false;
    }
    return true;
}

PicardClass combination(const SurfaceSpec& spec, const std::vector<int>& support,
                        const std::vector<Rational>& coeff, int N) {
    PicardClass acc{Rational(0), std::vector<Rational>((std::size_t)N, 0)};
    for (std::size_t i = 0; i < support.size(); ++i)
        acc = acc + coeff[i] * spec.curves[(std::size_t)support[i]];
    return acc;
}

}  // namespace

ZariskiDecomp zariski_seeded(const SurfaceSpec& spec, const PicardClass& D,
                             const std::vector<int>& initial_support) {
    if (D.npoints() != spec.N) throw PreconditionError("class size does not match the spec");
    bool hinted = !initial_support.empty();
    std::set<int> support;
    for (std::size_t c = 0; c < spec.curves.size(); ++c)
        if (intersect(D, spec.curves[c]) < 0) support.insert((int)c);
    for (int idx : initial_support) {
        if (idx < 0 || idx >= (int)spec.curves.size())
            throw PreconditionError("seed support index out of range");
        support.insert(idx);
    }

    // Grow the support on curves the residual meets negatively. The seed is a
    // hint: the moment it produces a singular Gram or a negative coefficient
    // the hinted attempt is abandoned for the plain growth iteration, so the
    // result never depends on the seed.
    for (std::size_t round = 0; round <= spec.curves.size() + 1; ++round) {
        std::vector<int> S(support.begin(), support.end());
        std::vector<Rational> coeff(S.size(), Rational(0));
        if (!S.empty()) {
            RatMatrix g = gram_matrix(spec, S);
            // An indefinite Gram can still admit an all-positive fixpoint
            // with P smaller than the true nef part, so it must be ruled out
            // here, not after convergence.
            if (!negative_definite(g)) {
                if (hinted) return zariski_seeded(spec, D, {});
                throw PreconditionError(
                    "support Gram matrix is not negative definite: invalid curve list");
            }
            RatVec rhs(S.size());
            for (std::size_t i = 0; i < S.size(); ++i)
                rhs[i] = intersect(D, spec.curves[(std::size_t)S[i]]);
            auto x = solve(g, rhs);
            if (!x) throw InvariantError("negative-definite Gram failed to solve");
            coeff.assign(x->e.begin(), x->e.end());
        }
        bool has_negative = false;
        for (const Rational& x : coeff)
            if (x < 0) has_negative = true;
        if (has_negative && hinted) return zariski_seeded(spec, D, {});

        PicardClass Nneg = combination(spec, S, coeff, spec.N);
        PicardClass P = D - Nneg;
        bool grew = false;
        for (std::size_t c = 0; c < spec.curves.size(); ++c) {
            if (support.count((int)c)) continue;
            if (intersect(P, spec.curves[c]) < 0) {
                support.insert((int)c);
                grew = true;
            }
        }
        if (grew) continue;

        if (intersect(P, P) < 0)
            throw PreconditionError("class is not pseudoeffective for the given curve data");
        if (has_negative)
            throw PreconditionError(
                "negative part has a negative coefficient: class not pseudoeffective");

        // Zero-coefficient seeds carry nothing; report the support of Nneg.
        ZariskiDecomp out;
        for (std::size_t i = 0; i < S.size(); ++i) {
            if (coeff[i] == 0) continue;
            out.support.push_back(S[i]);
            out.coefficients.push_back(coeff[i]);
        }
        if (!out.support.empty() && !negative_definite(gram_matrix(spec, out.support)))
            throw PreconditionError("support Gram matrix is not negative definite");
        for (int idx : S)
            if (intersect(P, spec.curves[(std::size_t)idx]) != 0)
                throw InvariantError("positive part not orthogonal to its support");
        out.P = std::move(P);
        out.Nneg = std::move(Nneg);
        return out;
    }
    throw InvariantError("Zariski iteration failed to converge");
}

ZariskiDecomp zariski(const SurfaceSpec& spec, const PicardClass& D) {
    return zariski_seeded(spec, D, {});
}

PicardClass RayChamber::positive_part_at(const Rational& t) const {
    return p_const + t * p_slope;
}

const RayChamber& RayDecomposition::chamber_at(const Rational& t) const {
    if (t < 0) throw PreconditionError("ray parameter must be nonnegative");
    for (const auto& ch : chambers) {
        if (t < ch.t_start) break;
        if (!ch.t_end || t <= *ch.t_end) return ch;
    }
    throw PreconditionError("ray parameter beyond mu");
}

bool RayDecomposition::below_mu(const Rational& t) const {
    if (t < 0) return false;
    if (mu.is_rational) return t < mu.value;
    if (t < mu.chamber_start) return true;
    // On the final chamber the volume quadratic is positive exactly below mu.
    Rational q = mu.qa * t * t + mu.qb * t + mu.qc;
    return q > 0;
}

Rational RayDecomposition::volume_at(const Rational& t) const {
    const RayChamber& ch = chamber_at(t);
    PicardClass P = ch.positive_part_at(t);
    return intersect(P, P);
}

namespace {

struct AffineSolve {
    std::vector<Rational> coeff_const, coeff_slope;
    PicardClass p_const, p_slope;
};

// Solve the orthogonality system on a fixed support for D_t = L - tG,
// splitting everything into constant and t-linear parts.
AffineSolve solve_chamber(const SurfaceSpec& spec, const PicardClass& L, const PicardClass& G,
                          const std::vector<int>& S) {
    AffineSolve a;
    a.coeff_const.assign(S.size(), Rational(0));
    a.coeff_slope.assign(S.size(), Rational(0));
    if (!S.empty()) {
        RatMatrix g = gram_matrix(spec, S);
        RatVec rhs_c(S.size()), rhs_s(S.size());
        for (std::size_t i = 0; i < S.size(); ++i) {
            rhs_c[i] = intersect(L, spec.curves[(std::size_t)S[i]]);
            rhs_s[i] = -intersect(G, spec.curves[(std::size_t)S[i]]);
        }
        auto xc = solve(g, rhs_c);
        auto xs = solve(g, rhs_s);
        if (!xc || !xs)
            throw PreconditionError(
                "singular support Gram matrix: curve list is not negative definite");
        a.coeff_const.assign(xc->e.begin(), xc->e.end());
        a.coeff_slope.assign(xs->e.begin(), xs->e.end());
    }
    PicardClass n_const = combination(spec, S, a.coeff_const, spec.N);
    PicardClass n_slope = combination(spec, S, a.coeff_slope, spec.N);
    a.p_const = L - n_const;
    PicardClass minus_g = Rational(-1) * G;
    a.p_slope = minus_g - n_slope;
    return a;
}

// Extend the support so that P_t meets every curve nonnegatively on a right
// neighborhood of t0.
std::vector<int> extend_support(const SurfaceSpec& spec, const PicardClass& L,
                                const PicardClass& G, std::set<int> support,
                                const Rational& t0) {
    for (;;) {
        std::vector<int> S(support.begin(), support.end());
        AffineSolve a = solve_chamber(spec, L, G, S);
        bool grew = false;
        for (std::size_t c = 0; c < spec.curves.size(); ++c) {
            if (support.count((int)c)) continue;
            Rational v = intersect(a.p_const, spec.curves[c]) +
                         t0 * intersect(a.p_slope, spec.curves[c]);
            Rational s = intersect(a.p_slope, spec.curves[c]);
            if (v < 0 || (v == 0 && s < 0)) {
                support.insert((int)c);
                grew = true;
            }
        }
        if (!grew) return S;
    }
}

struct QuadRootInChamber {
    bool exists = false;
    bool is_rational = false;
    Rational value;  // valid when rational
};

// Smallest zero of q(t) = a t^2 + b t + c with t >= t0, assuming q(t0) > 0.
QuadRootInChamber first_root_after(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& t0) {
    QuadRootInChamber r;
    if (a == 0) {
        if (b == 0) return r;
        Rational root = -c / b;
        if (root >= t0) {
            r.exists = true;
            r.is_rational = true;
            r.value = root;
        }
        return r;
    }
    Rational disc = b * b - 4 * a * c;
    if (disc < 0) return r;
    Rational sq;
    if (rational_sqrt(disc, &sq)) {
        Rational r1 = (-b - sq) / (2 * a);
        Rational r2 = (-b + sq) / (2 * a);
        if (r1 > r2) std::swap(r1, r2);
        if (r1 >= t0) {
            r.exists = true;
            r.is_rational = true;
            r.value = r1;
        } else if (r2 >= t0) {
            r.exists = true;
            r.is_rational = true;
            r.value = r2;
        }
        return r;
    }
    // Irrational roots: decide existence of a root past t0 by sign tests at
    // the parabola vertex.
    Rational vertex = -b / (2 * a);
    if (a < 0) {
        // q(t0) > 0 means t0 sits between the roots; the larger root lies ahead.
        r.exists = true;
        return r;
    }
    if (vertex >= t0) {
        Rational qv = a * vertex * vertex + b * vertex + c;
        if (qv <= 0) r.exists = true;
    }
    return r;
}

// Is the first root of q past t0 within [t0, upper]? Exact sign test.
bool root_at_or_before(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& t0, const Rational& upper) {
    Rational q_upper = a * upper * upper + b * upper + c;
    if (q_upper <= 0) return true;
    if (a > 0) {
        Rational vertex = -b / (2 * a);
        if (vertex > t0 && vertex < upper) {
            Rational qv = a * vertex * vertex + b * vertex + c;
            return qv <= 0;
        }
    }
    return false;
}

void verify_chamber(const SurfaceSpec& spec, const RayChamber& ch, const Rational& t_hi) {
    for (const Rational& t : {ch.t_start, t_hi}) {
        for (std::size_t i = 0; i < ch.support.size(); ++i) {
            Rational coeff = ch.coeff_const[i] + t * ch.coeff_slope[i];
            if (coeff < 0)
                throw InvariantError("negative-part coefficient dropped below zero on a chamber");
        }
        PicardClass P = ch.positive_part_at(t);
        for (const auto& C : spec.curves)
            if (intersect(P, C) < 0)
                throw InvariantError("positive part meets a curve negatively inside a chamber");
    }
}

}  // namespace

RayDecomposition ray_breakpoints(const SurfaceSpec& spec, const PicardClass& L) {
    return ray_breakpoints(spec, L, sum_of_exceptionals(spec.N));
}

RayDecomposition ray_breakpoints(const SurfaceSpec& spec, const PicardClass& L,
                                 const PicardClass& G) {
    if (L.npoints() != spec.N || G.npoints() != spec.N)
        throw PreconditionError("class size does not match the spec");

    RayDecomposition ray;
    ray.L = L;
    ray.G = G;

    ZariskiDecomp d0 = zariski(spec, L);
    if (intersect(d0.P, d0.P) <= 0) throw PreconditionError("L is not big");

    Rational t_cur = 0;
    std::set<int> support(d0.support.begin(), d0.support.end());
    std::vector<int> S = extend_support(spec, L, G, support, t_cur);

    for (std::size_t round = 0; round <= spec.curves.size() + 1; ++round) {
        AffineSolve a = solve_chamber(spec, L, G, S);
        RayChamber ch;
        ch.t_start = t_cur;
        ch.support = S;
        ch.coeff_const = a.coeff_const;
        ch.coeff_slope = a.coeff_slope;
        ch.p_const = a.p_const;
        ch.p_slope = a.p_slope;

        // Volume quadratic on this chamber.
        Rational qa = intersect(a.p_slope, a.p_slope);
        Rational qb = 2 * intersect(a.p_const, a.p_slope);
        Rational qc = intersect(a.p_const, a.p_const);

        // Next curve event: earliest parameter where a new curve would meet
        // P_t negatively.
        bool have_event = false;
        Rational t_event;
        std::set<int> in_support(S.begin(), S.end());
        for (std::size_t c = 0; c < spec.curves.size(); ++c) {
            if (in_support.count((int)c)) continue;
            Rational slope = intersect(a.p_slope, spec.curves[c]);
            if (slope >= 0) continue;
            Rational root = -intersect(a.p_const, spec.curves[c]) / slope;
            if (root <= t_cur) continue;
            if (!have_event || root < t_event) {
                have_event = true;
                t_event = root;
            }
        }

        bool mu_here = false;
        if (have_event) {
            mu_here = root_at_or_before(qa, qb, qc, t_cur, t_event);
        } else {
            QuadRootInChamber root = first_root_after(qa, qb, qc, t_cur);
            if (!root.exists)
                throw InvariantError("ray never leaves the big cone; check the curve data");
            mu_here = true;
        }

        if (mu_here) {
            QuadRootInChamber root = first_root_after(qa, qb, qc, t_cur);
            ray.mu.is_rational = root.is_rational;
            ray.mu.qa = qa;
            ray.mu.qb = qb;
            ray.mu.qc = qc;
            ray.mu.chamber_start = t_cur;
            if (root.is_rational) {
                ray.mu.value = root.value;
                ch.t_end = root.value;
                verify_chamber(spec, ch, root.value);
            } else {
                ch.t_end = std::nullopt;
                verify_chamber(spec, ch, t_cur);
            }
            ray.chambers.push_back(std::move(ch));
            return ray;
        }

        ch.t_end = t_event;
        verify_chamber(spec, ch, t_event);
        ray.chambers.push_back(std::move(ch));
        ray.breakpoints.push_back(t_event);
        support.insert(S.begin(), S.end());
        S = extend_support(spec, L, G, support, t_event);
        if (S.size() == ray.chambers.back().support.size())
            throw InvariantError("support did not grow at a breakpoint");
        t_cur = t_event;
    }
    throw InvariantError("chamber walk failed to terminate");
}

SurfaceRayBody surface_body(const SurfaceSpec& spec, const PicardClass& L, int j) {
    if (j < 0 || j >= spec.N) throw PreconditionError("point index out of range");
    PicardClass Ej = exceptional_class(spec.N, j);

    RayDecomposition ray = ray_breakpoints(spec, L);
    // p_j outside B_+(L): the exceptional curve must not sit in Supp(N_0).
    for (int idx : ray.chambers.front().support)
        if (spec.curves[(std::size_t)idx] == Ej)
            throw PreconditionError("point lies in the augmented base locus of L");
    if (!ray.mu.is_rational)
        throw PreconditionError(
            "mu is irrational; the ray body is only available on rational sub-intervals");

    std::vector<Rational> knots;
    knots.push_back(Rational(0));
    for (const auto& b : ray.breakpoints) knots.push_back(b);
    knots.push_back(ray.mu.value);

    std::vector<Rational> values;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const RayChamber& ch = i + 1 < knots.size() ? ray.chambers[i] : ray.chambers.back();
        values.push_back(intersect(ch.positive_part_at(knots[i]), Ej));
        if (i > 0 && i + 1 < knots.size()) {
            // Continuity across the breakpoint, from the left chamber.
            Rational left = intersect(ray.chambers[i - 1].positive_part_at(knots[i]), Ej);
            if (left != values.back())
                throw InvariantError("beta is discontinuous across a breakpoint");
        }
    }

    SurfaceRayBody body;
    body.j = j;
    body.breakpoints = knots;
    body.beta = PiecewiseLinear(knots, values);
    if (!body.beta.concave()) throw InvariantError("beta is not concave");

    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        pts.push_back(RatVec{knots[i], Rational(0)});
        pts.push_back(RatVec{knots[i], values[i]});
    }
    body.body_blowup_coords = convex_hull(pts);

    RatMatrix F_inv(2, 2);  // (t, y) -> (y, t - y)
    F_inv.at(0, 0) = 0;
    F_inv.at(0, 1) = 1;
    F_inv.at(1, 0) = 1;
    F_inv.at(1, 1) = -1;
    body.body_deglex_coords = linear_image(body.body_blowup_coords, F_inv, zero_vec(2));
    return body;
}

P2BodyFormula p2_body_formula(int N, const Rational& eps) {
    if (N < 9) throw PreconditionError("the closed form applies to N >= 9 points");
    if (eps <= 0 || Rational(N) * eps * eps > 1)
        throw PreconditionError("eps must satisfy 0 < eps <= 1/sqrt(N)");
    Rational mu = Rational(1) / (Rational(N) * eps);

    P2BodyFormula out;
    out.body_deglex_coords = convex_hull(
        {RatVec{Rational(0), Rational(0)}, RatVec{eps, Rational(0)}, RatVec{Rational(0), mu}});
    out.body_blowup_coords =
        convex_hull({RatVec{Rational(0), Rational(0)}, RatVec{eps, eps}, RatVec{mu, Rational(0)}});
    if (mu == eps) {
        out.profile = PiecewiseLinear({Rational(0), eps}, {Rational(0), eps});
    } else {
        out.profile = PiecewiseLinear({Rational(0), eps, mu}, {Rational(0), eps, Rational(0)});
    }
    return out;
}

Rational restricted_volume_slice(const SurfaceSpec& spec, const PicardClass& L, int j,
                                 const Rational& t) {
    if (j < 0 || j >= spec.N) throw PreconditionError("point index out of range");
    RayDecomposition ray = ray_breakpoints(spec, L);
    bool at_mu = ray.mu.is_rational && t == ray.mu.value;
    if (!(at_mu || ray.below_mu(t)))
        throw PreconditionError("slice parameter is not below mu");
    const RayChamber& ch = ray.chamber_at(t);
    return intersect(ch.positive_part_at(t), exceptional_class(spec.N, j));
}

VolumeDifferenceCheck volume_difference_check(const SurfaceSpec& spec, const PicardClass& L,
                                              const Rational& t) {
    if (t < 0) throw PreconditionError("t must be nonnegative");
    RayDecomposition ray = ray_breakpoints(spec, L);
    bool at_mu = ray.mu.is_rational && t == ray.mu.value;
    if (!(t == 0 || at_mu || ray.below_mu(t)))
        throw PreconditionError("t is not below mu");

    VolumeDifferenceCheck check;
    check.lhs = ray.volume_at(Rational(0)) - ray.volume_at(t);

    Rational total = 0;
    for (int j = 0; j < spec.N; ++j) {
        SurfaceRayBody body = surface_body(spec, L, j);
        total += body.beta.integral_to(t);
    }
    check.rhs = 2 * total;
    check.equal = check.lhs == check.rhs;
    return check;
}

int zariski_chamber_count(const SurfaceSpec& spec, const PicardClass& L) {
    return (int)ray_breakpoints(spec, L).chambers.size();
}

Rational seshadri_curve_infimum(const SurfaceSpec& spec, const PicardClass& L) {
    PicardClass G = sum_of_exceptionals(spec.N);
    bool have_curve_min = false;
    Rational curve_min;
    for (const auto& C : spec.curves) {
        Rational mult_total = 0;
        for (const auto& mi : C.m) mult_total += mi;
        if (mult_total <= 0) continue;
        Rational ratio = intersect(L, C) / mult_total;
        if (!have_curve_min || ratio < curve_min) {
            have_curve_min = true;
            curve_min = ratio;
        }
    }
    // Bigness cap: largest t with (L - tG)^2 >= 0.
    Rational qa = intersect(G, G);
    Rational qb = -2 * intersect(L, G);
    Rational qc = intersect(L, L);
    if (have_curve_min) {
        Rational q_at = qa * curve_min * curve_min + qb * curve_min + qc;
        if (q_at >= 0) return curve_min;  // curve bound is at or below the cap
    }
    QuadRootInChamber root = first_root_after(qa, qb, qc, Rational(0));
    if (root.exists && root.is_rational) return root.value;
    throw PreconditionError("Seshadri infimum is irrational for this input");
}

}  // namespace okb
