#include "okb/polytope.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace okb {

namespace {

Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Scale a rational vector by a positive factor so it becomes a primitive
// integer vector. The direction is preserved.
RatVec primitive_integer(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v.e) l = lcm(l, denominator(x));
    Int g = 0;
    std::vector<Int> ints(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        ints[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, ints[i]);
    }
    if (g == 0) return zero_vec(v.dim());
    RatVec out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

Rational scale_factor(const RatVec& from, const RatVec& to) {
    for (std::size_t i = 0; i < from.dim(); ++i)
        if (from[i] != 0) return to[i] / from[i];
    return Rational(0);
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

std::vector<RatVec> dedupe_sorted(std::vector<RatVec> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// cross(o->a, o->b) z-component; sign gives the turn direction.
Rational cross2(const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

RatVec cross3(const RatVec& a, const RatVec& b) {
    RatVec c(3);
    c[0] = a[1] * b[2] - a[2] * b[1];
    c[1] = a[2] * b[0] - a[0] * b[2];
    c[2] = a[0] * b[1] - a[1] * b[0];
    return c;
}

// Andrew's monotone chain on points in convex position or not; returns the
// counterclockwise cycle of extreme points, starting at the lex-least one.
// Callers must ensure the points affinely span the plane.
std::vector<RatVec> chain2(std::vector<RatVec> pts) {
    pts = dedupe_sorted(std::move(pts));
    std::size_t n = pts.size();
    std::vector<RatVec> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// Indices of the coordinate hyperplanes {x_i = 0} a canonical halfspace sits
// in: its normal must be parallel to e_i with offset zero.
bool is_coordinate_facet(const Halfspace& h) {
    if (h.offset != 0) return false;
    int nonzero = 0;
    for (const auto& x : h.normal.e)
        if (x != 0) ++nonzero;
    return nonzero == 1;
}

void finalize(Polytope& P) {
    P.vertices = dedupe_sorted(std::move(P.vertices));
    for (auto& h : P.halfspaces) h.canonicalize();
    std::sort(P.halfspaces.begin(), P.halfspaces.end(), halfspace_less);
    P.halfspaces.erase(std::unique(P.halfspaces.begin(), P.halfspaces.end()), P.halfspaces.end());
    P.coordinate_facets.clear();
    for (std::size_t i = 0; i < P.halfspaces.size(); ++i)
        if (is_coordinate_facet(P.halfspaces[i])) P.coordinate_facets.push_back((int)i);
}

// Affine basis: returns directions spanning aff(points) - points[0].
std::vector<RatVec> affine_basis(const std::vector<RatVec>& pts) {
    std::vector<RatVec> dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec d = pts[i] - pts[0];
        if (d.is_zero()) continue;
        std::vector<RatVec> trial = dirs;
        trial.push_back(d);
        if (rank(RatMatrix::from_rows(trial)) == trial.size()) dirs.push_back(d);
        if (dirs.size() == pts[0].dim()) break;
    }
    return dirs;
}

void add_equality_pair(Polytope& P, const RatVec& normal, const Rational& offset) {
    P.halfspaces.emplace_back(normal, offset);
    RatVec neg(normal.dim());
    for (std::size_t i = 0; i < normal.dim(); ++i) neg[i] = -normal[i];
    P.halfspaces.emplace_back(neg, -offset);
}

Polytope hull_point(int dim, const RatVec& v) {
    Polytope P;
    P.dim = dim;
    P.affine_dim = 0;
    P.vertices = {v};
    for (int i = 0; i < dim; ++i) add_equality_pair(P, unit_vec(dim, i), v[i]);
    finalize(P);
    return P;
}

Polytope hull_segment(int dim, const std::vector<RatVec>& pts) {
    RatVec d;
    for (const auto& p : pts) {
        d = p - pts[0];
        if (!d.is_zero()) break;
    }
    d = primitive_integer(d);
    const RatVec* lo = &pts[0];
    const RatVec* hi = &pts[0];
    for (const auto& p : pts) {
        if (dot(d, p) < dot(d, *lo)) lo = &p;
        if (dot(d, p) > dot(d, *hi)) hi = &p;
    }
    Polytope P;
    P.dim = dim;
    P.affine_dim = 1;
    P.vertices = {*lo, *hi};
    for (const auto& u : null_space(RatMatrix::from_rows({d})))
        add_equality_pair(P, primitive_integer(u), dot(primitive_integer(u), *lo));
    RatVec neg(d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i) neg[i] = -d[i];
    P.halfspaces.emplace_back(d, dot(d, *hi));
    P.halfspaces.emplace_back(neg, -dot(d, *lo));
    finalize(P);
    return P;
}

Polytope hull_polygon_2d(const std::vector<RatVec>& pts) {
    auto cycle = chain2(pts);
    Polytope P;
    P.dim = 2;
    P.affine_dim = 2;
    P.vertices = cycle;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const RatVec& a = cycle[i];
        const RatVec& b = cycle[(i + 1) % cycle.size()];
        RatVec n(2);
        n[0] = b[1] - a[1];
        n[1] = a[0] - b[0];
        P.halfspaces.emplace_back(n, dot(n, a));
    }
    finalize(P);
    return P;
}

// Planar polygon embedded in R^3: project out the dominant normal axis, take
// the 2D cycle there, and rebuild in-plane edge constraints.
Polytope hull_polygon_in_3d(const std::vector<RatVec>& pts, const std::vector<RatVec>& dirs) {
    RatVec n = primitive_integer(cross3(dirs[0], dirs[1]));
    std::size_t drop = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (rat_abs(n[i]) > rat_abs(n[drop])) drop = i;

    auto project = [&](const RatVec& p) {
        RatVec q(2);
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != drop) q[k++] = p[i];
        return q;
    };
    std::map<std::vector<Rational>, RatVec> lift;
    std::vector<RatVec> proj;
    for (const auto& p : dedupe_sorted(pts)) {
        RatVec q = project(p);
        lift[q.e] = p;
        proj.push_back(q);
    }
    auto cycle2 = chain2(proj);
    std::vector<RatVec> cycle;
    for (const auto& q : cycle2) cycle.push_back(lift.at(q.e));

    RatVec centroid = zero_vec(3);
    for (const auto& v : cycle) centroid = centroid + v;
    centroid = (Rational(1) / Rational((long)cycle.size())) * centroid;

    Polytope P;
    P.dim = 3;
    P.affine_dim = 2;
    P.vertices = cycle;
    add_equality_pair(P, n, dot(n, cycle[0]));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const RatVec& a = cycle[i];
        const RatVec& b = cycle[(i + 1) % cycle.size()];
        RatVec w = primitive_integer(cross3(n, b - a));
        if (dot(w, centroid) > dot(w, a)) {
            for (auto& x : w.e) x = -x;
        }
        P.halfspaces.emplace_back(w, dot(w, a));
    }
    finalize(P);
    return P;
}

// Supporting facet planes of a small 3D point set, by plane enumeration over
// all non-collinear triples. Quartic in the number of points, which stays
// small because the incremental driver below only ever passes running vertex
// sets.
std::vector<Halfspace> brute_facets_3d(const std::vector<RatVec>& pts) {
    std::vector<Halfspace> facets;
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                RatVec nor = cross3(pts[j] - pts[i], pts[k] - pts[i]);
                if (nor.is_zero()) continue;
                nor = primitive_integer(nor);
                Rational c = dot(nor, pts[i]);
                bool above = false, below = false;
                for (const auto& p : pts) {
                    Rational s = dot(nor, p);
                    if (s > c) above = true;
                    if (s < c) below = true;
                    if (above && below) break;
                }
                if (!above) facets.emplace_back(nor, c);
                if (!below) {
                    RatVec neg(3);
                    for (std::size_t t = 0; t < 3; ++t) neg[t] = -nor[t];
                    facets.emplace_back(neg, -c);
                }
            }
    std::sort(facets.begin(), facets.end(), halfspace_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

std::vector<RatVec> facet_vertices(const std::vector<RatVec>& pts,
                                   const std::vector<Halfspace>& facets) {
    std::vector<RatVec> verts;
    for (const auto& p : pts) {
        std::vector<RatVec> active;
        for (const auto& h : facets)
            if (dot(h.normal, p) == h.offset) active.push_back(h.normal);
        if (active.size() >= 3 && rank(RatMatrix::from_rows(active)) == 3) verts.push_back(p);
    }
    return dedupe_sorted(verts);
}

bool satisfies_all(const RatVec& p, const std::vector<Halfspace>& hs) {
    for (const auto& h : hs)
        if (dot(h.normal, p) > h.offset) return false;
    return true;
}

Polytope hull_3d(const std::vector<RatVec>& pts) {
    // Seed with four affinely independent points, then grow: points inside
    // the running hull are discarded, outside points trigger a rebuild from
    // the (small) running vertex set.
    std::vector<RatVec> sorted = dedupe_sorted(pts);
    std::vector<RatVec> core = {sorted[0]};
    std::vector<RatVec> dirs;
    for (const auto& p : sorted) {
        RatVec d = p - core[0];
        if (d.is_zero()) continue;
        std::vector<RatVec> trial = dirs;
        trial.push_back(d);
        if (rank(RatMatrix::from_rows(trial)) == trial.size()) {
            dirs = trial;
            core.push_back(p);
            if (core.size() == 4) break;
        }
    }
    std::vector<Halfspace> facets = brute_facets_3d(core);
    std::vector<RatVec> verts = facet_vertices(core, facets);
    for (const auto& p : sorted) {
        if (satisfies_all(p, facets)) continue;
        std::vector<RatVec> next = verts;
        next.push_back(p);
        facets = brute_facets_3d(next);
        verts = facet_vertices(next, facets);
    }
    Polytope P;
    P.dim = 3;
    P.affine_dim = 3;
    P.vertices = std::move(verts);
    P.halfspaces = std::move(facets);
    finalize(P);
    return P;
}

enum class IntersectStatus { ok, empty, unbounded };

// Fourier-Motzkin feasibility test for A x <= c; only used to tell empty
// intersections apart from unbounded ones when no vertex exists.
bool fm_feasible(int dim, std::vector<std::pair<RatVec, Rational>> rows) {
    for (int var = 0; var < dim; ++var) {
        std::vector<std::pair<RatVec, Rational>> pos, neg, zero;
        for (auto& r : rows) {
            if (r.first[var] > 0)
                pos.push_back(r);
            else if (r.first[var] < 0)
                neg.push_back(r);
            else
                zero.push_back(r);
        }
        std::vector<std::pair<RatVec, Rational>> next = zero;
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational lp = p.first[var];
                Rational mq = -q.first[var];
                RatVec a = mq * p.first + lp * q.first;
                next.emplace_back(a, mq * p.second + lp * q.second);
            }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.second < 0) return false;
    return true;
}

void subset_candidates(const std::vector<Halfspace>& hs, int dim, std::vector<RatVec>& out) {
    std::size_t m = hs.size();
    std::vector<std::size_t> idx(dim);
    // Iterate over all dim-subsets of constraints.
    std::vector<std::size_t> c(dim);
    std::iota(c.begin(), c.end(), 0);
    if (m < (std::size_t)dim) return;
    while (true) {
        std::vector<RatVec> normals;
        for (int i = 0; i < dim; ++i) normals.push_back(hs[c[i]].normal);
        RatMatrix A = RatMatrix::from_rows(normals);
        RatVec b(dim);
        for (int i = 0; i < dim; ++i) b[i] = hs[c[i]].offset;
        if (auto x = solve(A, b)) {
            if (satisfies_all(*x, hs)) out.push_back(*x);
        }
        // next combination
        int i = dim - 1;
        while (i >= 0 && c[i] == m - dim + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < dim; ++j) c[j] = c[j - 1] + 1;
    }
}

bool has_recession_ray(const std::vector<Halfspace>& hs, int dim) {
    auto is_ray = [&](const RatVec& d) {
        if (d.is_zero()) return false;
        for (const auto& h : hs)
            if (dot(h.normal, d) > 0) return false;
        return true;
    };
    if (dim == 1) {
        RatVec plus(1), minus(1);
        plus[0] = 1;
        minus[0] = -1;
        return is_ray(plus) || is_ray(minus);
    }
    // Extreme rays of the (pointed) recession cone lie on dim-1 independent
    // active constraints.
    std::size_t m = hs.size();
    std::vector<std::size_t> c(dim - 1);
    std::iota(c.begin(), c.end(), 0);
    if (m < (std::size_t)(dim - 1)) return true;  // too few constraints to pin the cone
    while (true) {
        std::vector<RatVec> normals;
        for (int i = 0; i < dim - 1; ++i) normals.push_back(hs[c[i]].normal);
        RatMatrix A = RatMatrix::from_rows(normals);
        if (rank(A) == (std::size_t)(dim - 1)) {
            for (const auto& d : null_space(A)) {
                RatVec neg(d.dim());
                for (std::size_t i = 0; i < d.dim(); ++i) neg[i] = -d[i];
                if (is_ray(d) || is_ray(neg)) return true;
            }
        }
        int i = dim - 2;
        while (i >= 0 && c[i] == m - (dim - 1) + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < dim - 1; ++j) c[j] = c[j - 1] + 1;
    }
    return false;
}

IntersectStatus classify_intersection(int dim, std::vector<Halfspace> hs, Polytope* out) {
    for (auto& h : hs) {
        if (h.normal.dim() != (std::size_t)dim)
            throw PreconditionError("halfspace dimension mismatch");
        h.canonicalize();
        if (h.normal.is_zero()) throw PreconditionError("halfspace with zero normal");
    }
    // Same normal: keep the tightest offset.
    std::sort(hs.begin(), hs.end(), halfspace_less);
    std::vector<Halfspace> tight;
    for (const auto& h : hs) {
        if (!tight.empty() && tight.back().normal == h.normal) continue;  // sorted: first is tightest
        tight.push_back(h);
    }
    hs = std::move(tight);

    std::vector<RatVec> cand;
    subset_candidates(hs, dim, cand);
    cand = dedupe_sorted(std::move(cand));
    if (cand.empty()) {
        std::vector<std::pair<RatVec, Rational>> rows;
        for (const auto& h : hs) rows.emplace_back(h.normal, h.offset);
        return fm_feasible(dim, std::move(rows)) ? IntersectStatus::unbounded
                                                 : IntersectStatus::empty;
    }
    if (has_recession_ray(hs, dim)) return IntersectStatus::unbounded;
    *out = convex_hull(cand);
    return IntersectStatus::ok;
}

}  // namespace

void Halfspace::canonicalize() {
    RatVec prim = primitive_integer(normal);
    if (prim.is_zero()) {
        normal = prim;
        return;
    }
    Rational f = scale_factor(normal, prim);
    normal = prim;
    offset *= f;
}

Polytope Polytope::make_empty(int dim) {
    Polytope P;
    P.dim = dim;
    P.affine_dim = -1;
    return P;
}

Polytope convex_hull(const std::vector<RatVec>& points) {
    if (points.empty()) throw PreconditionError("convex hull of an empty point set");
    int dim = (int)points.front().dim();
    if (dim < 1 || dim > 3) throw PreconditionError("convex hull supports dimensions 1..3");
    for (const auto& p : points)
        if ((int)p.dim() != dim) throw PreconditionError("dimension mismatch among points");

    std::vector<RatVec> pts = dedupe_sorted(points);
    std::vector<RatVec> dirs = affine_basis(pts);
    int adim = (int)dirs.size();

    if (adim == 0) return hull_point(dim, pts[0]);
    if (adim == 1) return hull_segment(dim, pts);
    if (dim == 2) return hull_polygon_2d(pts);
    if (adim == 2) return hull_polygon_in_3d(pts, dirs);
    return hull_3d(pts);
}

Polytope halfspace_intersection(int dim, const std::vector<Halfspace>& hs) {
    if (dim < 1 || dim > 3) throw PreconditionError("halfspace intersection supports dimensions 1..3");
    Polytope P;
    switch (classify_intersection(dim, hs, &P)) {
        case IntersectStatus::empty:
            throw EmptyIntersectionError();
        case IntersectStatus::unbounded:
            throw UnboundedIntersectionError();
        case IntersectStatus::ok:
            return P;
    }
    throw InvariantError("unreachable");
}

namespace {

Rational polygon_area(const std::vector<RatVec>& cycle) {
    Rational twice = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const RatVec& a = cycle[i];
        const RatVec& b = cycle[(i + 1) % cycle.size()];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return rat_abs(twice) / 2;
}

}  // namespace

Rational volume(const Polytope& P) {
    if (P.empty() || P.affine_dim < P.dim) return Rational(0);
    if (P.dim == 0) return Rational(1);
    if (P.dim == 1) return P.vertices.back()[0] - P.vertices.front()[0];
    if (P.dim == 2) return polygon_area(boundary_cycle(P));
    // Fan of facet cones from the lexicographically least vertex.
    const RatVec& apex = P.vertices.front();
    Rational six_vol = 0;
    for (const auto& h : P.halfspaces) {
        if (dot(h.normal, apex) == h.offset) continue;
        auto cycle = facet_cycle(P, h);
        if (cycle.size() < 3) throw InvariantError("facet of a 3-polytope with < 3 vertices");
        Rational facet_sum = 0;
        for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
            RatVec u = cycle[i] - cycle[0];
            RatVec v = cycle[i + 1] - cycle[0];
            RatVec w = apex - cycle[0];
            facet_sum += dot(cross3(u, v), w);
        }
        six_vol += rat_abs(facet_sum);
    }
    return six_vol / 6;
}

Polytope linear_image(const Polytope& P, const RatMatrix& A, const RatVec& b) {
    if (A.rows != A.cols || (int)A.rows != P.dim)
        throw PreconditionError("linear image expects a square matrix matching the dimension");
    if (determinant(A) == 0) throw PreconditionError("linear image of a singular matrix");
    if (P.empty()) return Polytope::make_empty(P.dim);
    std::vector<RatVec> img;
    img.reserve(P.vertices.size());
    for (const auto& v : P.vertices) img.push_back(mat_vec(A, v) + b);
    return convex_hull(img);
}

Polytope dilate(const Polytope& P, const Rational& t) {
    if (t <= 0) throw PreconditionError("dilation factor must be positive");
    if (P.empty()) return Polytope::make_empty(P.dim);
    std::vector<RatVec> img;
    for (const auto& v : P.vertices) img.push_back(t * v);
    return convex_hull(img);
}

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
    if (P.dim != Q.dim) throw PreconditionError("Minkowski sum dimension mismatch");
    if (P.empty() || Q.empty()) return Polytope::make_empty(P.dim);
    std::vector<RatVec> sums;
    for (const auto& p : P.vertices)
        for (const auto& q : Q.vertices) sums.push_back(p + q);
    return convex_hull(sums);
}

Polytope slice_at(const Polytope& P, int axis, const Rational& t) {
    if (axis < 0 || axis >= P.dim) throw PreconditionError("slice axis out of range");
    int sdim = P.dim - 1;
    if (P.empty()) return Polytope::make_empty(sdim);

    std::vector<Halfspace> reduced;
    bool infeasible = false;
    for (const auto& h : P.halfspaces) {
        RatVec n(sdim);
        std::size_t k = 0;
        for (int i = 0; i < P.dim; ++i)
            if (i != axis) n[k++] = h.normal[i];
        Rational c = h.offset - h.normal[axis] * t;
        if (n.is_zero()) {
            if (c < 0) infeasible = true;
            continue;
        }
        reduced.emplace_back(n, c);
    }
    if (infeasible) return Polytope::make_empty(sdim);

    if (sdim == 0) {
        // R^0: the slice is a single point (already validated feasible).
        Polytope pt;
        pt.dim = 0;
        pt.affine_dim = 0;
        pt.vertices = {RatVec(0)};
        return pt;
    }
    Polytope out;
    switch (classify_intersection(sdim, reduced, &out)) {
        case IntersectStatus::empty:
            return Polytope::make_empty(sdim);
        case IntersectStatus::unbounded:
            throw InvariantError("slice of a bounded polytope reported unbounded");
        case IntersectStatus::ok:
            return out;
    }
    throw InvariantError("unreachable");
}

namespace {

struct IntConstraint {
    std::array<std::int64_t, 3> a{0, 0, 0};
    std::int64_t c = 0;
};

// Integerize the halfspaces of kP. Returns false if any value leaves the
// int64 fast-path range (callers then fall back to rational tests).
bool integerize(const Polytope& P, long k, std::vector<IntConstraint>& rows) {
    const std::int64_t limit = std::int64_t(1) << 40;
    for (const auto& h : P.halfspaces) {
        Rational rc = h.offset * k;
        Int den = denominator(rc);
        IntConstraint row;
        for (int i = 0; i < P.dim; ++i) {
            auto v = to_int64(numerator(h.normal[i]) * den);  // canonical normals are integers
            if (!v || std::abs(*v) > limit) return false;
            row.a[i] = *v;
        }
        auto c = to_int64(numerator(rc));
        if (!c || std::abs(*c) > limit) return false;
        row.c = *c;
        rows.push_back(row);
    }
    return true;
}

}  // namespace

std::vector<std::vector<std::int64_t>> LatticePointList::rows() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        std::vector<std::int64_t> row((std::size_t)dim);
        for (int c = 0; c < dim; ++c) row[(std::size_t)c] = at(i, c);
        out.push_back(std::move(row));
    }
    return out;
}

LatticePointList lattice_points(const Polytope& P, long k, Exec exec) {
    if (k < 1) throw PreconditionError("lattice_points expects k >= 1");
    LatticePointList out;
    out.dim = P.dim;
    if (P.empty()) return out;

    std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
    for (int i = 0; i < P.dim; ++i) {
        Rational mn = P.vertices.front()[i], mx = mn;
        for (const auto& v : P.vertices) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        auto l = to_int64(rational_ceil(mn * k));
        auto h = to_int64(rational_floor(mx * k));
        if (!l || !h) throw PreconditionError("lattice scan range exceeds 64-bit bounds");
        lo[i] = *l;
        hi[i] = *h;
        if (lo[i] > hi[i]) return out;
    }

    std::vector<IntConstraint> rows;
    bool fast = integerize(P, k, rows);

    auto inside_fast = [&](const std::array<std::int64_t, 3>& p) {
        for (const auto& r : rows) {
            std::int64_t s = 0;
            for (int i = 0; i < P.dim; ++i) s += r.a[i] * p[i];
            if (s > r.c) return false;
        }
        return true;
    };
    auto inside_exact = [&](const std::array<std::int64_t, 3>& p) {
        RatVec x(P.dim);
        for (int i = 0; i < P.dim; ++i) x[i] = Rational(p[i]);
        for (const auto& h : P.halfspaces)
            if (dot(h.normal, x) > h.offset * k) return false;
        return true;
    };
    auto visit_x0 = [&](std::int64_t x0, auto&& emit) {
        std::array<std::int64_t, 3> p{x0, 0, 0};
        if (P.dim == 1) {
            if (fast ? inside_fast(p) : inside_exact(p)) emit(p);
            return;
        }
        for (std::int64_t x1 = lo[1]; x1 <= hi[1]; ++x1) {
            p[1] = x1;
            if (P.dim == 2) {
                if (fast ? inside_fast(p) : inside_exact(p)) emit(p);
                continue;
            }
            for (std::int64_t x2 = lo[2]; x2 <= hi[2]; ++x2) {
                p[2] = x2;
                if (fast ? inside_fast(p) : inside_exact(p)) emit(p);
            }
        }
    };

    const std::int64_t span = hi[0] - lo[0] + 1;
    if (exec == Exec::serial) {
        for (std::int64_t s = 0; s < span; ++s)
            visit_x0(lo[0] + s, [&](const std::array<std::int64_t, 3>& p) {
                for (int i = 0; i < P.dim; ++i) out.flat.push_back(p[(std::size_t)i]);
            });
        return out;
    }
    // Two passes: count hits per x0 slab, then write each slab into its own
    // disjoint range of one preallocated buffer. Keeps the output in serial
    // order without any merge copy.
    std::vector<std::int64_t> offsets((std::size_t)span + 1, 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < span; ++s) {
        std::int64_t hits = 0;
        visit_x0(lo[0] + s, [&](const std::array<std::int64_t, 3>&) { ++hits; });
        offsets[(std::size_t)s + 1] = hits;
    }
    for (std::int64_t s = 0; s < span; ++s) offsets[(std::size_t)s + 1] += offsets[(std::size_t)s];
    out.flat.resize((std::size_t)offsets[(std::size_t)span] * (std::size_t)P.dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < span; ++s) {
        std::size_t pos = (std::size_t)offsets[(std::size_t)s] * (std::size_t)P.dim;
        visit_x0(lo[0] + s, [&](const std::array<std::int64_t, 3>& p) {
            for (int i = 0; i < P.dim; ++i) out.flat[pos++] = p[(std::size_t)i];
        });
    }
    return out;
}

bool contains(const Polytope& P, const RatVec& x, ContainMode mode) {
    if (P.empty()) return false;
    if ((int)x.dim() != P.dim) throw PreconditionError("containment query dimension mismatch");
    for (std::size_t i = 0; i < P.halfspaces.size(); ++i) {
        const auto& h = P.halfspaces[i];
        Rational s = dot(h.normal, x);
        bool coordinate =
            std::find(P.coordinate_facets.begin(), P.coordinate_facets.end(), (int)i) !=
            P.coordinate_facets.end();
        if (mode == ContainMode::closure || coordinate) {
            if (s > h.offset) return false;
        } else {
            if (s >= h.offset) return false;
        }
    }
    return true;
}

std::vector<RatVec> boundary_cycle(const Polytope& P) {
    if (P.dim != 2 || P.affine_dim != 2)
        throw PreconditionError("boundary cycle requires a full-dimensional 2D polytope");
    return chain2(P.vertices);
}

std::vector<RatVec> facet_cycle(const Polytope& P, const Halfspace& h) {
    std::vector<RatVec> on;
    for (const auto& v : P.vertices)
        if (dot(h.normal, v) == h.offset) on.push_back(v);
    if (on.size() <= 2 || P.dim != 3) return on;

    std::size_t drop = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (rat_abs(h.normal[i]) > rat_abs(h.normal[drop])) drop = i;
    std::map<std::vector<Rational>, RatVec> lift;
    std::vector<RatVec> proj;
    for (const auto& p : on) {
        RatVec q(2);
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != drop) q[k++] = p[i];
        lift[q.e] = p;
        proj.push_back(q);
    }
    std::vector<RatVec> cycle;
    for (const auto& q : chain2(proj)) cycle.push_back(lift.at(q.e));
    return cycle;
}

}  // namespace okb
