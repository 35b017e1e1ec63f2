#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "okb/semigroup.hpp"
#include "okb/toric.hpp"

using namespace okb;
using namespace okb::testing;

namespace {

DelzantPolytope square_poly() { return DelzantPolytope({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)}); }
DelzantPolytope simplex_poly() { return DelzantPolytope({v2(0, 0), v2(1, 0), v2(0, 1)}); }

}  // namespace

TEST_CASE("vertex charts match the torus-fixed coordinate conventions") {
    DelzantPolytope sq = square_poly();
    const VertexChart& origin = sq.chart(vertex_index_of(sq.base(), v2(0, 0)));
    CHECK(origin.inverse_basis == RatMatrix::identity(2));

    const VertexChart& far = sq.chart(vertex_index_of(sq.base(), v2(1, 1)));
    CHECK(far.apply(v2(1, 1)) == v2(0, 0));
    CHECK(far.apply(RatVec{Q(1, 4), Q(1, 2)}) == RatVec{Q(3, 4), Q(1, 2)});  // (1-m1, 1-m2)

    DelzantPolytope tri = simplex_poly();
    const VertexChart& e1 = tri.chart(vertex_index_of(tri.base(), v2(1, 0)));
    // phi(m) = (1 - m1 - m2, m2), edge directions (-1,0) and (-1,1).
    CHECK(e1.apply(v2(0, 0)) == v2(1, 0));
    CHECK(e1.apply(RatVec{Q(1, 2), Q(1, 4)}) == RatVec{Q(1, 4), Q(1, 4)});
    CHECK(e1.edge_dirs[0] == IntVec{-1, 0});
    CHECK(e1.edge_dirs[1] == IntVec{-1, 1});
}

TEST_CASE("non-Delzant vertices are rejected") {
    // (0,0),(2,1),(1,2): at the origin the directions (2,1),(1,2) have det 3.
    CHECK_THROWS_AS(DelzantPolytope({v2(0, 0), v2(2, 1), v2(1, 2)}), PreconditionError);
    CHECK_THROWS_AS(DelzantPolytope({v2(0, 0), RatVec{Q(1, 2), Q(0)}, v2(0, 1)}),
                    PreconditionError);
}

TEST_CASE("vanishing orders") {
    DelzantPolytope sq = square_poly();
    CHECK(vanishing_order(sq, vertex_index_of(sq.base(), v2(0, 0)), v2(1, 1)) == 2);
    CHECK(vanishing_order(sq, vertex_index_of(sq.base(), v2(1, 1)), v2(1, 1)) == 0);
    DelzantPolytope tri = simplex_poly();
    CHECK(vanishing_order(tri, vertex_index_of(tri.base(), v2(1, 0)), v2(0, 0)) == 1);
}

TEST_CASE("subdivision of the square at all four vertices is barycentric") {
    DelzantPolytope sq = square_poly();
    ToricInput in(sq, all_vertices(sq));
    auto cells = toric_subdivision(in);
    REQUIRE(cells.size() == 4);
    Rational quarter = Q(1, 4);
    RatVec center{Q(1, 2), Q(1, 2)};
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(volume(cells[j]) == quarter);
        CHECK(contains(cells[j], center, ContainMode::closure));
        // Each cell is the axis-aligned half-square at its vertex.
        CHECK(contains(cells[j], sq.base().vertices[(std::size_t)in.chosen[j]],
                       ContainMode::closure));
    }
}

TEST_CASE("subdivision of the square at two opposite corners splits along the diagonal") {
    DelzantPolytope sq = square_poly();
    int o = vertex_index_of(sq.base(), v2(0, 0));
    int c = vertex_index_of(sq.base(), v2(1, 1));
    auto cells = toric_subdivision(ToricInput(sq, {o, c}));
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].vertices == std::vector<RatVec>{v2(0, 0), v2(0, 1), v2(1, 0)});
    CHECK(cells[1].vertices == std::vector<RatVec>{v2(0, 1), v2(1, 0), v2(1, 1)});
}

TEST_CASE("barycentric subdivision of the simplex") {
    DelzantPolytope tri = simplex_poly();
    ToricInput in(tri, all_vertices(tri));
    auto cells = toric_subdivision(in);
    REQUIRE(cells.size() == 3);
    Rational total = 0;
    RatVec barycenter{Q(1, 3), Q(1, 3)};
    for (const auto& cell : cells) {
        CHECK(volume(cell) == Q(1, 6));
        CHECK(contains(cell, barycenter, ContainMode::closure));
        total += volume(cell);
    }
    CHECK(total == volume(tri.base()));
}

TEST_CASE("toric bodies of the named inputs") {
    DelzantPolytope sq = square_poly();
    ToricInput all4(sq, all_vertices(sq));
    for (int j = 0; j < 4; ++j) {
        Polytope body = toric_body(all4, j);
        CHECK(body.vertices == std::vector<RatVec>{v2(0, 0), RatVec{Q(0), Q(1, 2)},
                                                   RatVec{Q(1, 2), Q(0)},
                                                   RatVec{Q(1, 2), Q(1, 2)}});
    }

    ToricInput one(sq, {vertex_index_of(sq.base(), v2(0, 0))});
    CHECK(toric_body(one, 0).vertices == sq.base().vertices);

    DelzantPolytope tri = simplex_poly();
    ToricInput all3(tri, {vertex_index_of(tri.base(), v2(0, 0)),
                          vertex_index_of(tri.base(), v2(1, 0)),
                          vertex_index_of(tri.base(), v2(0, 1))});
    Polytope body0 = toric_body(all3, 0);
    CHECK(body0.vertices == std::vector<RatVec>{v2(0, 0), RatVec{Q(0), Q(1, 2)},
                                                RatVec{Q(1, 3), Q(1, 3)},
                                                RatVec{Q(1, 2), Q(0)}});
    // All three chart images land in the nonnegative orthant with 0 a vertex.
    for (int j = 0; j < 3; ++j) {
        Polytope body = toric_body(all3, j);
        for (const auto& v : body.vertices)
            for (const auto& x : v.e) CHECK(x >= 0);
        CHECK(contains(body, v2(0, 0), ContainMode::closure));
    }
}

TEST_CASE("toric Seshadri values") {
    DelzantPolytope sq = square_poly();
    CHECK(toric_seshadri(ToricInput(sq, all_vertices(sq))) == Q(1, 2));
    CHECK(toric_seshadri(ToricInput(sq, {vertex_index_of(sq.base(), v2(0, 0))})) == Q(1));

    DelzantPolytope tri = simplex_poly();
    CHECK(toric_seshadri(ToricInput(tri, all_vertices(tri))) == Q(1, 2));
    CHECK(toric_seshadri(ToricInput(tri, {vertex_index_of(tri.base(), v2(0, 0))})) == Q(1));

    // Length-2 edges, no chosen neighbors: the minimum stays the full length.
    DelzantPolytope big({v2(0, 0), v2(2, 0), v2(0, 2)});
    CHECK(toric_seshadri(ToricInput(big, {vertex_index_of(big.base(), v2(0, 0))})) == Q(2));
    CHECK(toric_seshadri(ToricInput(big, all_vertices(big))) == Q(1));
}

TEST_CASE("oracle export: counts and level-0 record") {
    DelzantPolytope sq = square_poly();
    GradedValuationData data = toric_oracle_export(ToricInput(sq, all_vertices(sq)), 3);
    CHECK(data.records_at(0).size() == 1);
    for (const auto& val : data.records_at(0).front().vals)
        CHECK(val.entries == IntVec{0, 0});
    CHECK(data.h0.at(1) == 4);
    CHECK(data.h0.at(2) == 9);
    CHECK(data.h0.at(3) == 16);

    DelzantPolytope tri = simplex_poly();
    GradedValuationData tri_data = toric_oracle_export(ToricInput(tri, all_vertices(tri)), 1);
    CHECK(tri_data.records_at(1).size() == 3);
}

TEST_CASE("oracle export parallel matches serial") {
    DelzantPolytope tri({v2(0, 0), v2(3, 0), v2(0, 3)});
    ToricInput in(tri, all_vertices(tri));
    GradedValuationData a = toric_oracle_export(in, 12, Exec::parallel);
    GradedValuationData b = toric_oracle_export(in, 12, Exec::serial);
    REQUIRE(a.levels.size() == b.levels.size());
    for (const auto& [k, recs] : a.levels) {
        const auto& other = b.records_at(k);
        REQUIRE(recs.size() == other.size());
        for (std::size_t i = 0; i < recs.size(); ++i)
            for (int j = 0; j < a.N; ++j)
                CHECK(recs[i].vals[(std::size_t)j].entries == other[i].vals[(std::size_t)j].entries);
    }
}

TEST_CASE("volume identity on the named inputs") {
    DelzantPolytope sq = square_poly();
    auto check_all4 = toric_volume_check(ToricInput(sq, all_vertices(sq)));
    CHECK(check_all4.lhs == 2);
    CHECK(check_all4.rhs == 2);
    CHECK(check_all4.equal);

    int o = vertex_index_of(sq.base(), v2(0, 0));
    int c = vertex_index_of(sq.base(), v2(1, 1));
    auto check_opp = toric_volume_check(ToricInput(sq, {o, c}));
    CHECK(check_opp.lhs == 2);
    CHECK(check_opp.equal);

    DelzantPolytope tri = simplex_poly();
    auto check_tri = toric_volume_check(ToricInput(tri, all_vertices(tri)));
    CHECK(check_tri.lhs == 1);
    CHECK(check_tri.rhs == 1);
    CHECK(check_tri.equal);
}

TEST_CASE("volume identity and half-integrality across the corpus") {
    for (const auto& [name, input] : full_toric_corpus()) {
        INFO(name);
        auto check = toric_volume_check(input);
        CHECK(check.equal);
        Rational eps = toric_seshadri(input);
        Int den = denominator(eps);
        CHECK((den == 1 || den == 2));
        // Subdivision covers the polytope exactly.
        auto cells = toric_subdivision(input);
        Rational total = 0;
        for (const auto& cell : cells) total += volume(cell);
        CHECK(total == volume(input.polytope.base()));
    }
}

TEST_CASE("oracle hulls sit inside the closed-form bodies (desk scale)") {
    for (const auto& [name, input] : named_toric_corpus()) {
        INFO(name);
        GradedValuationData data = toric_oracle_export(input, 12);
        for (std::size_t j = 0; j < input.chosen.size(); ++j) {
            Polytope closed = toric_body(input, (int)j);
            SemigroupBodyApprox approx = body_approx(data, (int)j, 12);
            for (const auto& [k, hull] : approx.level_hulls) {
                if (hull.empty()) continue;
                for (const auto& v : hull.vertices)
                    CHECK(contains(closed, v, ContainMode::closure));
            }
        }
    }
}

TEST_CASE("bodies of the dilated polytope are the dilated bodies") {
    for (long k : {2L, 3L}) {
        for (const auto& [name, input] : named_toric_corpus()) {
            INFO(name << " k=" << k);
            std::vector<RatVec> scaled;
            for (const auto& v : input.polytope.base().vertices)
                scaled.push_back(Rational(k) * v);
            DelzantPolytope kP(scaled);
            std::vector<int> chosen_k;
            for (int c : input.chosen)
                chosen_k.push_back(vertex_index_of(
                    kP.base(), Rational(k) * input.polytope.base().vertices[(std::size_t)c]));
            ToricInput scaled_in(kP, chosen_k);
            for (std::size_t j = 0; j < input.chosen.size(); ++j) {
                Polytope small = toric_body(input, (int)j);
                Polytope big = toric_body(scaled_in, (int)j);
                CHECK(big.vertices == dilate(small, Rational(k)).vertices);
            }
        }
    }
}

TEST_CASE("three-dimensional polytopes: cube and simplex") {
    std::vector<RatVec> cube_verts;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) cube_verts.push_back(v3(x, y, z));
    DelzantPolytope cube(cube_verts);
    CHECK(cube.vertex_count() == 8);
    ToricInput all8(cube, all_vertices(cube));
    auto cells = toric_subdivision(all8);
    Rational total = 0;
    for (const auto& cell : cells) {
        CHECK(volume(cell) == Q(1, 8));
        total += volume(cell);
    }
    CHECK(total == 1);
    CHECK(toric_seshadri(all8) == Q(1, 2));
    auto check = toric_volume_check(all8);
    CHECK(check.equal);
    CHECK(check.lhs == 6);  // 3! * 1

    DelzantPolytope tet({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
    ToricInput one(tet, {vertex_index_of(tet.base(), v3(0, 0, 0))});
    CHECK(toric_body(one, 0).vertices == tet.base().vertices);
    CHECK(toric_seshadri(one) == 1);
    CHECK(toric_volume_check(ToricInput(tet, all_vertices(tet))).equal);

    GradedValuationData data = toric_oracle_export(ToricInput(tet, all_vertices(tet)), 4);
    for (long k = 1; k <= 4; ++k) CHECK(check_dimension_partition(data, k));
}
