#include "okb/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace okb {

namespace {

Int int_gcd_vec(const RatVec& v) {
    Int g = 0;
    for (const auto& x : v.e) {
        if (denominator(x) != 1) throw PreconditionError("expected an integer vector");
        g = gcd(g, numerator(x));
    }
    return g;
}

// Adjacency of vertices along edges: v and w span an edge iff the halfspaces
// active at both have normals of rank dim-1.
std::vector<std::vector<int>> edge_adjacency(const Polytope& P) {
    int n = P.dim;
    std::size_t V = P.vertices.size();
    std::vector<std::vector<int>> adj(V);
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = a + 1; b < V; ++b) {
            std::vector<RatVec> common;
            for (const auto& h : P.halfspaces)
                if (dot(h.normal, P.vertices[a]) == h.offset &&
                    dot(h.normal, P.vertices[b]) == h.offset)
                    common.push_back(h.normal);
            if (!common.empty() && rank(RatMatrix::from_rows(common)) == (std::size_t)(n - 1)) {
                adj[a].push_back((int)b);
                adj[b].push_back((int)a);
            }
        }
    return adj;
}

}  // namespace

RatVec VertexChart::apply(const RatVec& m) const { return mat_vec(inverse_basis, m - vertex); }

DelzantPolytope::DelzantPolytope(const std::vector<RatVec>& integer_vertices) {
    if (integer_vertices.empty()) throw PreconditionError("empty vertex list");
    int n = (int)integer_vertices.front().dim();
    if (n < 2 || n > 3)
        throw PreconditionError("Delzant polytopes are supported in dimensions 2 and 3");
    for (const auto& v : integer_vertices)
        for (const auto& x : v.e)
            if (denominator(x) != 1)
                throw PreconditionError("Delzant polytope vertices must be lattice points");

    base_ = convex_hull(integer_vertices);
    if (!base_.full_dim())
        throw PreconditionError("Delzant polytope must be full-dimensional");

    auto adj = edge_adjacency(base_);
    charts_.resize(base_.vertices.size());
    for (std::size_t v = 0; v < base_.vertices.size(); ++v) {
        if ((int)adj[v].size() != n)
            throw PreconditionError("vertex " + std::to_string(v) + " does not have exactly " +
                                    std::to_string(n) + " edges");
        // Slot the edges so the chart's i-th coordinate tracks the ambient
        // i-th coordinate: slot i takes the unassigned primitive direction
        // with the largest |i-th component|, ties to the lex-smallest. This
        // pins the axis order of the deglex tie-breaks.
        std::vector<std::pair<RatVec, int>> pool;  // primitive direction, far vertex
        for (int w : adj[v]) {
            RatVec d = base_.vertices[(std::size_t)w] - base_.vertices[v];
            Int g = int_gcd_vec(d);
            RatVec prim(d.dim());
            for (std::size_t i = 0; i < d.dim(); ++i)
                prim[i] = make_rational(numerator(d[i]) / g, 1);
            pool.emplace_back(prim, w);
        }
        std::vector<int> order;
        std::vector<bool> taken(pool.size(), false);
        for (int slot = 0; slot < n; ++slot) {
            int best = -1;
            for (std::size_t e = 0; e < pool.size(); ++e) {
                if (taken[e]) continue;
                if (best < 0) {
                    best = (int)e;
                    continue;
                }
                Rational cand = pool[e].first[(std::size_t)slot];
                Rational cur = pool[(std::size_t)best].first[(std::size_t)slot];
                if (cand < 0) cand = -cand;
                if (cur < 0) cur = -cur;
                if (cand > cur ||
                    (cand == cur && lex_less(pool[e].first, pool[(std::size_t)best].first)))
                    best = (int)e;
            }
            taken[(std::size_t)best] = true;
            order.push_back(best);
        }

        VertexChart chart;
        chart.vertex_index = (int)v;
        chart.vertex = base_.vertices[v];
        std::vector<RatVec> dirs;
        for (int slot : order) {
            int w = pool[(std::size_t)slot].second;
            RatVec d = base_.vertices[(std::size_t)w] - base_.vertices[v];
            Int g = int_gcd_vec(d);
            RatVec prim(d.dim());
            IntVec prim_int(d.dim());
            for (std::size_t i = 0; i < d.dim(); ++i) {
                prim[i] = make_rational(numerator(d[i]) / g, 1);
                auto pi = to_int64(numerator(prim[i]));
                if (!pi) throw PreconditionError("edge direction exceeds 64-bit range");
                prim_int[i] = *pi;
            }
            dirs.push_back(prim);
            chart.edge_dirs.push_back(prim_int);
            auto len = to_int64(g);
            if (!len) throw PreconditionError("edge length exceeds 64-bit range");
            chart.edge_lengths.push_back((long)*len);
            chart.edge_far_vertex.push_back(w);
        }
        RatMatrix B = RatMatrix::from_cols(dirs);
        Rational det = determinant(B);
        if (det != 1 && det != -1)
            throw PreconditionError("non-Delzant vertex " + std::to_string(v) +
                                    ": edge directions are not a lattice basis");
        chart.inverse_basis = *inverse(B);
        charts_[v] = std::move(chart);
    }

    // The chart must send P into the nonnegative orthant with the vertex at 0.
    for (const auto& chart : charts_) {
        for (const auto& w : base_.vertices) {
            RatVec img = chart.apply(w);
            for (const auto& x : img.e)
                if (x < 0) throw InvariantError("vertex chart leaves the nonnegative orthant");
        }
        if (!chart.apply(chart.vertex).is_zero())
            throw InvariantError("vertex chart does not vanish at its vertex");
    }
}

const VertexChart& DelzantPolytope::chart(int v) const {
    if (v < 0 || v >= (int)charts_.size())
        throw PreconditionError("vertex index out of range");
    return charts_[(std::size_t)v];
}

ToricInput::ToricInput(DelzantPolytope p, std::vector<int> chosen_vertices)
    : polytope(std::move(p)), chosen(std::move(chosen_vertices)) {
    if (chosen.empty()) throw PreconditionError("at least one chosen vertex is required");
    std::set<int> seen;
    for (int v : chosen) {
        if (v < 0 || v >= polytope.vertex_count())
            throw PreconditionError("chosen vertex index out of range");
        if (!seen.insert(v).second) throw PreconditionError("chosen vertex indices must be distinct");
    }
}

const VertexChart& vertex_chart(const DelzantPolytope& P, int v) { return P.chart(v); }

Rational vanishing_order(const DelzantPolytope& P, int v, const RatVec& m) {
    RatVec img = P.chart(v).apply(m);
    Rational s = 0;
    for (const auto& x : img.e) s += x;
    return s;
}

namespace {

// l_j as an affine functional: gradient and constant term.
std::pair<RatVec, Rational> vanishing_functional(const DelzantPolytope& P, int v) {
    const VertexChart& chart = P.chart(v);
    int n = P.dim();
    RatVec grad(n);
    for (int j = 0; j < n; ++j) {
        Rational col_sum = 0;
        for (int i = 0; i < n; ++i) col_sum += chart.inverse_basis.at((std::size_t)i, (std::size_t)j);
        grad[(std::size_t)j] = col_sum;
    }
    Rational constant = -dot(grad, chart.vertex);
    return {grad, constant};
}

}  // namespace

std::vector<Polytope> toric_subdivision(const ToricInput& input) {
    const DelzantPolytope& P = input.polytope;
    std::vector<std::pair<RatVec, Rational>> ell;
    for (int v : input.chosen) ell.push_back(vanishing_functional(P, v));

    std::vector<Polytope> cells;
    for (std::size_t j = 0; j < input.chosen.size(); ++j) {
        std::vector<Halfspace> hs = P.base().halfspaces;
        for (std::size_t i = 0; i < input.chosen.size(); ++i) {
            if (i == j) continue;
            // l_j(m) <= l_i(m)
            hs.emplace_back(ell[j].first - ell[i].first, ell[i].second - ell[j].second);
        }
        cells.push_back(halfspace_intersection(P.dim(), hs));
    }
    return cells;
}

Polytope toric_body(const ToricInput& input, int j) {
    if (j < 0 || j >= (int)input.chosen.size())
        throw PreconditionError("chosen-point index out of range");
    Polytope cell = toric_subdivision(input)[(std::size_t)j];
    const VertexChart& chart = input.polytope.chart(input.chosen[(std::size_t)j]);
    RatVec shift = mat_vec(chart.inverse_basis, chart.vertex);
    for (auto& x : shift.e) x = -x;
    return linear_image(cell, chart.inverse_basis, shift);
}

Rational toric_seshadri(const ToricInput& input) {
    std::set<int> chosen(input.chosen.begin(), input.chosen.end());
    Rational best;
    bool first = true;
    for (int v : input.chosen) {
        const VertexChart& chart = input.polytope.chart(v);
        for (std::size_t e = 0; e < chart.edge_lengths.size(); ++e) {
            Rational len(chart.edge_lengths[e]);
            if (chosen.count(chart.edge_far_vertex[e])) len /= 2;
            if (first || len < best) {
                best = len;
                first = false;
            }
        }
    }
    return best;
}

GradedValuationData toric_oracle_export(const ToricInput& input, long k_max, Exec exec) {
    if (k_max < 1) throw PreconditionError("oracle export expects k_max >= 1");
    const DelzantPolytope& P = input.polytope;
    int n = P.dim();
    int N = (int)input.chosen.size();

    GradedValuationData data;
    data.n = n;
    data.N = N;
    data.order = MonomialOrder::deglex;

    // Integer chart matrices A_j and offsets k*A_j*x_j per level.
    std::vector<std::vector<IntVec>> A(N);
    std::vector<IntVec> Ax(N);
    for (int j = 0; j < N; ++j) {
        const VertexChart& chart = P.chart(input.chosen[(std::size_t)j]);
        A[(std::size_t)j].assign((std::size_t)n, IntVec((std::size_t)n));
        Ax[(std::size_t)j].assign((std::size_t)n, 0);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                const Rational& x = chart.inverse_basis.at((std::size_t)r, (std::size_t)c);
                if (denominator(x) != 1)
                    throw InvariantError("unimodular chart with non-integer inverse");
                A[(std::size_t)j][(std::size_t)r][(std::size_t)c] =
                    *to_int64(numerator(x));
            }
            RatVec row = chart.inverse_basis.row((std::size_t)r);
            Rational off = dot(row, chart.vertex);
            Ax[(std::size_t)j][(std::size_t)r] = *to_int64(numerator(off));
        }
    }

    // Level 0: the constant section.
    data.levels[0] = {SectionRecord{
        std::vector<ValuationVector>((std::size_t)N,
                                     ValuationVector(IntVec((std::size_t)n, 0), data.order))}};
    data.h0[0] = 1;

    std::vector<std::vector<SectionRecord>> per_level((std::size_t)k_max);
    auto build_level = [&](long k) {
        LatticePointList pts = lattice_points(P.base(), k, Exec::serial);
        std::vector<SectionRecord>& recs = per_level[(std::size_t)(k - 1)];
        recs.reserve(pts.size());
        for (std::size_t p = 0; p < pts.size(); ++p) {
            SectionRecord rec;
            rec.vals.reserve((std::size_t)N);
            for (int j = 0; j < N; ++j) {
                IntVec val((std::size_t)n, 0);
                for (int r = 0; r < n; ++r) {
                    std::int64_t s = -k * Ax[(std::size_t)j][(std::size_t)r];
                    for (int c = 0; c < n; ++c)
                        s += A[(std::size_t)j][(std::size_t)r][(std::size_t)c] * pts.at(p, c);
                    val[(std::size_t)r] = s;
                }
                rec.vals.emplace_back(std::move(val), data.order);
            }
            recs.push_back(std::move(rec));
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 1; k <= k_max; ++k) build_level(k);
    } else {
        for (long k = 1; k <= k_max; ++k) build_level(k);
    }
    for (long k = 1; k <= k_max; ++k) {
        data.h0[k] = (long)per_level[(std::size_t)(k - 1)].size();
        data.levels[k] = std::move(per_level[(std::size_t)(k - 1)]);
    }
    return data;
}

ToricVolumeCheck toric_volume_check(const ToricInput& input) {
    Rational factorial = 1;
    for (int i = 2; i <= input.polytope.dim(); ++i) factorial *= i;
    Rational body_sum = 0;
    for (std::size_t j = 0; j < input.chosen.size(); ++j)
        body_sum += volume(toric_body(input, (int)j));
    ToricVolumeCheck check;
    check.lhs = factorial * body_sum;
    check.rhs = factorial * volume(input.polytope.base());
    check.equal = check.lhs == check.rhs;
    return check;
}

}  // namespace okb
