#pragma once

// Shared helpers for the test suites: named polytopes, the toric test corpus
// (named inputs plus seeded random Delzant polygons), and small conveniences.

#include "okb/polytope.hpp"
#include "okb/toric.hpp"

#include <random>
#include <string>
#include <vector>

namespace okb::testing {

inline Rational Q(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

inline RatVec v2(long x, long y) { return RatVec{Rational(x), Rational(y)}; }
inline RatVec v3(long x, long y, long z) { return RatVec{Rational(x), Rational(y), Rational(z)}; }

inline Polytope unit_square() { return convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)}); }

inline Polytope simplex2(long scale = 1) {
    return convex_hull({v2(0, 0), v2(scale, 0), v2(0, scale)});
}

inline Polytope unit_cube() {
    std::vector<RatVec> pts;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) pts.push_back(v3(x, y, z));
    return convex_hull(pts);
}

inline Polytope simplex3() { return convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}); }

inline int vertex_index_of(const Polytope& P, const RatVec& v) {
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
        if (P.vertices[i] == v) return (int)i;
    throw std::runtime_error("vertex not found: " + vec_str(v));
}

inline std::vector<int> all_vertices(const DelzantPolytope& P) {
    std::vector<int> idx(P.vertex_count());
    for (int i = 0; i < P.vertex_count(); ++i) idx[(std::size_t)i] = i;
    return idx;
}

// Delzant polygons sampled from parameterized families (rectangles, dilated
// simplices, Hirzebruch trapezoids, corner-cut rectangles), randomly
// translated inside [0,6]^2. Every member is Delzant by construction.
inline std::vector<RatVec> random_delzant_polygon(std::mt19937_64& rng) {
    auto pick = [&](long lo, long hi) {
        return (long)std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    std::vector<RatVec> verts;
    switch (pick(0, 3)) {
        case 0: {  // rectangle a x b
            long a = pick(1, 5), b = pick(1, 5);
            verts = {v2(0, 0), v2(a, 0), v2(a, b), v2(0, b)};
            break;
        }
        case 1: {  // dilated standard simplex
            long a = pick(1, 6);
            verts = {v2(0, 0), v2(a, 0), v2(0, a)};
            break;
        }
        case 2: {  // Hirzebruch trapezoid {x,y >= 0, y <= b, x + y <= a}, a > b
            long b = pick(1, 4), a = b + pick(1, 6 - b > 0 ? 6 - b : 1);
            if (a > 6) a = 6;
            verts = {v2(0, 0), v2(a, 0), v2(a - b, b), v2(0, b)};
            break;
        }
        default: {  // rectangle with one unimodularly cut corner
            long a = pick(2, 5), b = pick(2, 5);
            long c = pick(1, std::min(a, b) - 1);
            verts = {v2(0, 0), v2(a, 0), v2(a, b), v2(c, b), v2(0, b - c)};
            break;
        }
    }
    long max_x = 0, max_y = 0;
    for (const auto& v : verts) {
        max_x = std::max(max_x, (long)numerator(v[0]).convert_to<long long>());
        max_y = std::max(max_y, (long)numerator(v[1]).convert_to<long long>());
    }
    long dx = pick(0, 6 - max_x), dy = pick(0, 6 - max_y);
    for (auto& v : verts) {
        v[0] += dx;
        v[1] += dy;
    }
    return verts;
}

struct ToricCase {
    std::string name;
    ToricInput input;
};

// The named corpus: square and simplex with the chosen-vertex subsets the
// acceptance criteria call out.
inline std::vector<ToricCase> named_toric_corpus() {
    std::vector<ToricCase> cases;
    {
        DelzantPolytope sq({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
        int o = vertex_index_of(sq.base(), v2(0, 0));
        int e1 = vertex_index_of(sq.base(), v2(1, 0));
        int e2 = vertex_index_of(sq.base(), v2(0, 1));
        int c = vertex_index_of(sq.base(), v2(1, 1));
        cases.push_back({"square/one", ToricInput(sq, {o})});
        cases.push_back({"square/2-opposite", ToricInput(sq, {o, c})});
        cases.push_back({"square/2-adjacent", ToricInput(sq, {o, e1})});
        cases.push_back({"square/all-4", ToricInput(sq, {o, e1, e2, c})});
    }
    {
        DelzantPolytope tri({v2(0, 0), v2(1, 0), v2(0, 1)});
        int o = vertex_index_of(tri.base(), v2(0, 0));
        int e1 = vertex_index_of(tri.base(), v2(1, 0));
        int e2 = vertex_index_of(tri.base(), v2(0, 1));
        cases.push_back({"simplex/one", ToricInput(tri, {o})});
        cases.push_back({"simplex/two", ToricInput(tri, {o, e1})});
        cases.push_back({"simplex/all-3", ToricInput(tri, {o, e1, e2})});
    }
    return cases;
}

// Named corpus plus 20 seeded random Delzant polygons with all vertices
// chosen (and, for variety, a leading 2-subset).
inline std::vector<ToricCase> full_toric_corpus() {
    auto cases = named_toric_corpus();
    std::mt19937_64 rng(20240517);
    for (int i = 0; i < 20; ++i) {
        DelzantPolytope poly(random_delzant_polygon(rng));
        cases.push_back({"random-" + std::to_string(i) + "/all",
                         ToricInput(poly, all_vertices(poly))});
        if (poly.vertex_count() >= 2)
            cases.push_back({"random-" + std::to_string(i) + "/two", ToricInput(poly, {0, 1})});
    }
    return cases;
}

}  // namespace okb::testing
